#pragma once

#include <functional>
#include <optional>

#include "procat/error.hpp"

namespace procat::probar {

// Given a fully faithful F : C -> D, an object map g : Ob(D) -> Ob(C) and isomorphisms
// phi(d) : d -> F(g(d)), builds G with G(d) = g(d) and
// G(f : d -> d') = F^{-1}(phi(d') ∘ f ∘ phi(d)^{-1}). The hom-set inverse of F is a caller-supplied
// search; PreimageNotFound when it returns nothing.
template <class DObject, class DMorphism, class CObject, class CMorphism>
class InverseEquivalence {
 public:
  struct Data {
    std::function<CObject(const DObject&)> on_objects;
    std::function<DMorphism(const DObject&)> iso;
    std::function<DMorphism(const DObject&)> iso_inverse;
    std::function<DMorphism(const DMorphism& second, const DMorphism& first)> compose;
    std::function<DObject(const DMorphism&)> domain;
    std::function<DObject(const DMorphism&)> codomain;
    std::function<std::optional<CMorphism>(const DMorphism&, const CObject&, const CObject&)> preimage;
  };

  explicit InverseEquivalence(Data data) : data_(std::move(data)) {}

  CObject apply_object(const DObject& d) const { return data_.on_objects(d); }

  CMorphism apply_morphism(const DMorphism& f) const {
    const DObject d = data_.domain(f);
    const DObject d2 = data_.codomain(f);
    const DMorphism conjugated = data_.compose(data_.iso(d2), data_.compose(f, data_.iso_inverse(d)));
    std::optional<CMorphism> pre = data_.preimage(conjugated, apply_object(d), apply_object(d2));
    require(pre.has_value(), ErrorKind::kPreimageNotFound, "inverse equivalence: no preimage under the functor");
    return *pre;
  }

  DMorphism iso(const DObject& d) const { return data_.iso(d); }
  DMorphism iso_inverse(const DObject& d) const { return data_.iso_inverse(d); }

 private:
  Data data_;
};

}  // namespace procat::probar
