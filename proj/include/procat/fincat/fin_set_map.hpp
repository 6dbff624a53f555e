#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace procat::fincat {

// A function {0..dom-1} -> {0..cod-1}. Finite sets are identified with their sizes.
class FinSetMap {
 public:
  FinSetMap() = default;
  FinSetMap(std::size_t dom, std::size_t cod, std::vector<std::size_t> images);

  static FinSetMap identity(std::size_t n);
  static FinSetMap constant(std::size_t dom, std::size_t cod, std::size_t value);
  static FinSetMap from_empty(std::size_t cod) { return FinSetMap(0, cod, {}); }

  std::size_t dom() const noexcept { return images_.size(); }
  std::size_t cod() const noexcept { return cod_; }
  std::size_t operator()(std::size_t i) const;
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return dom() == cod_ && is_injective(); }
  bool is_identity() const;

  // Two-sided inverse when bijective.
  std::optional<FinSetMap> inverse() const;

  friend bool operator==(const FinSetMap&, const FinSetMap&) = default;

 private:
  std::size_t cod_ = 0;
  std::vector<std::size_t> images_;
};

// g after f. Throws InvalidArgument when f.cod() != g.dom().
FinSetMap compose(const FinSetMap& g, const FinSetMap& f);

// [f, g] : A + B -> C for f : A -> C and g : B -> C.
FinSetMap copair(const FinSetMap& f, const FinSetMap& g);

// f + g : A + B -> C + D.
FinSetMap coproduct(const FinSetMap& f, const FinSetMap& g);

std::string to_string(const FinSetMap& f);

}  // namespace procat::fincat
