#include "procat/fincat/fin_set_map.hpp"

#include <sstream>

#include "procat/error.hpp"

namespace procat::fincat {

FinSetMap::FinSetMap(std::size_t dom, std::size_t cod, std::vector<std::size_t> images)
    : cod_(cod), images_(std::move(images)) {
  require(images_.size() == dom, ErrorKind::kInvalidArgument, "map image count differs from domain size");
  for (std::size_t v : images_)
    require(v < cod_, ErrorKind::kInvalidArgument, "map image out of codomain range");
}

FinSetMap FinSetMap::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return FinSetMap(n, n, std::move(images));
}

FinSetMap FinSetMap::constant(std::size_t dom, std::size_t cod, std::size_t value) {
  return FinSetMap(dom, cod, std::vector<std::size_t>(dom, value));
}

std::size_t FinSetMap::operator()(std::size_t i) const {
  require(i < images_.size(), ErrorKind::kInvalidArgument, "map argument out of domain range");
  return images_[i];
}

bool FinSetMap::is_injective() const {
  std::vector<bool> hit(cod_, false);
  for (std::size_t v : images_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool FinSetMap::is_surjective() const {
  std::vector<bool> hit(cod_, false);
  std::size_t count = 0;
  for (std::size_t v : images_) {
    if (!hit[v]) ++count;
    hit[v] = true;
  }
  return count == cod_;
}

bool FinSetMap::is_identity() const {
  if (dom() != cod_) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::optional<FinSetMap> FinSetMap::inverse() const {
  if (!is_bijective()) return std::nullopt;
  std::vector<std::size_t> inv(cod_);
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return FinSetMap(cod_, dom(), std::move(inv));
}

FinSetMap compose(const FinSetMap& g, const FinSetMap& f) {
  require(f.cod() == g.dom(), ErrorKind::kInvalidArgument,
          "compose: codomain " + std::to_string(f.cod()) + " does not match domain " + std::to_string(g.dom()));
  std::vector<std::size_t> images(f.dom());
  for (std::size_t i = 0; i < f.dom(); ++i) images[i] = g.images()[f.images()[i]];
  return FinSetMap(f.dom(), g.cod(), std::move(images));
}

FinSetMap copair(const FinSetMap& f, const FinSetMap& g) {
  require(f.cod() == g.cod(), ErrorKind::kInvalidArgument, "copair: codomains differ");
  std::vector<std::size_t> images = f.images();
  images.insert(images.end(), g.images().begin(), g.images().end());
  return FinSetMap(f.dom() + g.dom(), f.cod(), std::move(images));
}

FinSetMap coproduct(const FinSetMap& f, const FinSetMap& g) {
  std::vector<std::size_t> images = f.images();
  for (std::size_t v : g.images()) images.push_back(f.cod() + v);
  return FinSetMap(f.dom() + g.dom(), f.cod() + g.cod(), std::move(images));
}

std::string to_string(const FinSetMap& f) {
  std::ostringstream out;
  out << f.dom() << "->" << f.cod() << " [";
  for (std::size_t i = 0; i < f.dom(); ++i) out << (i ? "," : "") << f.images()[i];
  out << "]";
  return out.str();
}

}  // namespace procat::fincat
