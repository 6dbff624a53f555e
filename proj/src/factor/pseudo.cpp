#include "procat/factor/pseudo.hpp"

#include "procat/error.hpp"

namespace procat::factor {

StrictifiedFactorization::StrictifiedFactorization(std::shared_ptr<const PseudoFunctorialFactorization> pseudo)
    : pseudo_(std::move(pseudo)) {
  require(pseudo_ != nullptr, ErrorKind::kInvalidArgument, "pseudo_to_functorial: null factorization");
}

FactorizationTriple StrictifiedFactorization::factor(const FinSetMap& f) const {
  const PseudoFactorization d = pseudo_->factor(f);
  require(d.source_iso.dom() == f.dom() && d.target_iso.dom() == f.cod(), ErrorKind::kInvalidArgument,
          "pseudo factorization: isomorphism data has the wrong domain");
  require(d.source_iso.is_bijective(), ErrorKind::kNotInvertible, "pseudo factorization: (i_f)_0 is not invertible");
  const auto target_inverse = d.target_iso.inverse();
  require(target_inverse.has_value(), ErrorKind::kNotInvertible, "pseudo factorization: (i_f)_1 is not invertible");
  return {f, fincat::compose(d.q, d.source_iso), d.mid, fincat::compose(*target_inverse, d.p)};
}

FinSetMap StrictifiedFactorization::on_square(const FinSetMap& f, const FinSetMap& t, const FinSetMap& l,
                                              const FinSetMap& k) const {
  return pseudo_->on_square(f, t, l, k);
}

std::unique_ptr<FunctorialFactorization> pseudo_to_functorial(std::shared_ptr<const PseudoFunctorialFactorization> pseudo) {
  return std::make_unique<StrictifiedFactorization>(std::move(pseudo));
}

std::vector<std::string> pseudo_failures(const PseudoFactorization& d, const FinSetMap& f) {
  std::vector<std::string> out;
  if (!d.source_iso.is_bijective() || d.source_iso.dom() != f.dom()) out.push_back("(i_f)_0 is not an isomorphism of X");
  if (!d.target_iso.is_bijective() || d.target_iso.dom() != f.cod()) out.push_back("(i_f)_1 is not an isomorphism of Y");
  if (!out.empty()) return out;
  if (d.q.dom() != d.source_iso.cod() || d.q.cod() != d.mid || d.p.dom() != d.mid || d.p.cod() != d.target_iso.cod())
    return {"pseudo factorization maps have the wrong endpoints"};
  if (fincat::compose(d.p, fincat::compose(d.q, d.source_iso)) != fincat::compose(d.target_iso, f))
    out.push_back("p ∘ q ∘ i_0 differs from i_1 ∘ f");
  return out;
}

std::vector<std::string> square_action_failures(const FunctorialFactorization& ff, const FinSetMap& f,
                                                const FinSetMap& t, const FinSetMap& l, const FinSetMap& k) {
  const FactorizationTriple a = ff.factor(f);
  const FactorizationTriple b = ff.factor(t);
  std::vector<std::string> out;
  if (fincat::compose(a.p, a.q) != f) out.push_back("factorization of f does not compose back");
  if (fincat::compose(b.p, b.q) != t) out.push_back("factorization of t does not compose back");
  const FinSetMap mid = ff.on_square(f, t, l, k);
  if (mid.dom() != a.mid || mid.cod() != b.mid) return {"square action has the wrong endpoints"};
  if (fincat::compose(mid, a.q) != fincat::compose(b.q, l)) out.push_back("left square of the action fails");
  if (fincat::compose(b.p, mid) != fincat::compose(k, a.p)) out.push_back("right square of the action fails");
  return out;
}

std::vector<std::string> identity_action_failures(const FunctorialFactorization& ff, const FinSetMap& f) {
  const FinSetMap mid = ff.on_square(f, f, FinSetMap::identity(f.dom()), FinSetMap::identity(f.cod()));
  if (!mid.is_identity()) return {"identity square does not act as the identity"};
  return {};
}

std::vector<std::string> composite_action_failures(const FunctorialFactorization& ff, const FinSetMap& f,
                                                   const FinSetMap& t, const FinSetMap& u, const FinSetMap& l1,
                                                   const FinSetMap& k1, const FinSetMap& l2, const FinSetMap& k2) {
  const FinSetMap pasted = ff.on_square(f, u, fincat::compose(l2, l1), fincat::compose(k2, k1));
  const FinSetMap stepwise = fincat::compose(ff.on_square(t, u, l2, k2), ff.on_square(f, t, l1, k1));
  if (pasted != stepwise) return {"pasted square does not act as the composite"};
  return {};
}

}  // namespace procat::factor
