#pragma once

#include <cstdint>
#include <vector>

#include "osc/weil.hpp"

namespace osc {

enum class ElementClass { central, unipotent_type, split_regular, nonsplit_regular };

/// Classify by the discriminant tr(g)^2 - 4 of the characteristic polynomial.
ElementClass classify_element(const SL2Element& g, const PrimeModulus& mod);

enum class TorusKind { split, nonsplit };

inline const char* to_string(TorusKind k) { return k == TorusKind::split ? "split" : "nonsplit"; }

/// Maximal commutative subgroup of SL_2(F_p), cyclic of order p-1 (split) or
/// p+1 (non-split), with a deterministic generator choice.
struct Torus {
    std::int64_t id = -1;
    TorusKind kind = TorusKind::split;
    std::int64_t order = 0;
    SL2Element generator;
    std::vector<SL2Element> elements;  // sorted lexicographically

    bool contains(const SL2Element& g) const;
};

/// All maximal tori of the given kind: p(p+1)/2 split, p(p-1)/2 non-split.
/// Every torus is the centralizer of its regular elements; ids are assigned
/// in a deterministic enumeration order.
std::vector<Torus> enumerate_tori(const PrimeModulus& mod, TorusKind kind);

/// Both kinds, split first, with globally unique ids.
std::vector<Torus> enumerate_all_tori(const PrimeModulus& mod);

/// Conjugate torus g T g^{-1}; id is resolved against `tori` (same modulus,
/// same enumeration), throws if not found.
const Torus& conjugate_torus(const Torus& t, const SL2Element& g, const std::vector<Torus>& tori);

}  // namespace osc
