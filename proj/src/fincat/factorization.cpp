#include "procat/fincat/factorization.hpp"

#include <limits>
#include <vector>

#include "procat/error.hpp"

namespace procat::fincat {

FactorizationTriple graph_factorization(const FinSetMap& f) {
  const std::size_t mid = f.dom() + f.cod();
  std::vector<std::size_t> q(f.dom());
  for (std::size_t i = 0; i < f.dom(); ++i) q[i] = i;
  return {f, FinSetMap(f.dom(), mid, std::move(q)), mid, copair(f, FinSetMap::identity(f.cod()))};
}

FactorizationTriple GraphFactorization::factor(const FinSetMap& f) const { return graph_factorization(f); }

FinSetMap GraphFactorization::on_square(const FinSetMap& f, const FinSetMap& t, const FinSetMap& l,
                                        const FinSetMap& k) const {
  require(l.dom() == f.dom() && l.cod() == t.dom() && k.dom() == f.cod() && k.cod() == t.cod(),
          ErrorKind::kInvalidArgument, "on_square: maps do not form a square between the arrows");
  require(compose(t, l) == compose(k, f), ErrorKind::kPreconditionViolated, "on_square: square does not commute");
  return coproduct(l, k);
}

bool commutes(const LiftingSquare& sq) {
  if (sq.left.dom() != sq.top.dom() || sq.left.cod() != sq.bottom.dom() || sq.top.cod() != sq.right.dom() ||
      sq.right.cod() != sq.bottom.cod())
    return false;
  return compose(sq.right, sq.top) == compose(sq.bottom, sq.left);
}

bool solves(const LiftingSquare& sq, const FinSetMap& lift) {
  if (lift.dom() != sq.left.cod() || lift.cod() != sq.right.dom()) return false;
  return compose(lift, sq.left) == sq.top && compose(sq.right, lift) == sq.bottom;
}

FinSetMap finset_lift(const LiftingSquare& sq) {
  require(commutes(sq), ErrorKind::kPreconditionViolated, "finset_lift: square does not commute");
  require(sq.left.is_injective(), ErrorKind::kPreconditionViolated, "finset_lift: left leg not injective");
  require(sq.right.is_surjective(), ErrorKind::kPreconditionViolated, "finset_lift: right leg not surjective");
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> least_preimage(sq.right.cod(), kUnset);
  for (std::size_t x = sq.right.dom(); x-- > 0;) least_preimage[sq.right.images()[x]] = x;
  std::vector<std::size_t> images(sq.left.cod(), kUnset);
  for (std::size_t a = 0; a < sq.left.dom(); ++a) images[sq.left.images()[a]] = sq.top.images()[a];
  for (std::size_t b = 0; b < images.size(); ++b)
    if (images[b] == kUnset) images[b] = least_preimage[sq.bottom.images()[b]];
  return FinSetMap(sq.left.cod(), sq.right.dom(), std::move(images));
}

}  // namespace procat::fincat
