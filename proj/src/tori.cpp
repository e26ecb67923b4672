#include "osc/tori.hpp"

#include <algorithm>
#include <set>

namespace osc {

ElementClass classify_element(const SL2Element& g, const PrimeModulus& mod) {
    const bool central = (g.b == 0 && g.c == 0 && g.a == g.d);
    if (central) return ElementClass::central;
    const std::int64_t tr = g.trace();
    const std::int64_t disc = mod.reduce(tr * tr - 4);
    switch (mod.legendre(disc)) {
        case 1: return ElementClass::split_regular;
        case -1: return ElementClass::nonsplit_regular;
        default: return ElementClass::unipotent_type;
    }
}

bool Torus::contains(const SL2Element& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

namespace {

// The centralizer of a regular g is the unimodular part of the algebra
// F_p[g] = span{I, g0}, g0 the traceless part of g. Tori therefore biject
// with lines of traceless matrices whose determinant is a non-square times
// a nonzero scalar (split) or square times nonzero (non-split).
Torus torus_from_traceless(std::int64_t u, std::int64_t b, std::int64_t c,
                           const PrimeModulus& mod, TorusKind kind) {
    const std::int64_t p = mod.p();
    const std::int64_t det0 = mod.reduce(-u * u - b * c);
    Torus t;
    t.kind = kind;
    t.order = kind == TorusKind::split ? p - 1 : p + 1;
    for (std::int64_t al = 0; al < p; ++al)
        for (std::int64_t be = 0; be < p; ++be)
            if ((al * al + be * be % p * det0) % p == 1) {
                SL2Element e;
                e.p = p;
                e.a = (al + be * u) % p;
                e.b = be * b % p;
                e.c = be * c % p;
                e.d = mod.reduce(al - be * u);
                t.elements.push_back(e);
            }
    std::sort(t.elements.begin(), t.elements.end());
    if (static_cast<std::int64_t>(t.elements.size()) != t.order)
        throw Error("torus size mismatch: expected " + std::to_string(t.order) + ", got " +
                    std::to_string(t.elements.size()));
    // Smallest element (lexicographic) attaining the full order.
    for (const auto& g : t.elements)
        if (g.order() == t.order) {
            t.generator = g;
            return t;
        }
    throw NotCyclic("no generator of full order found");
}

}  // namespace

std::vector<Torus> enumerate_tori(const PrimeModulus& mod, TorusKind kind) {
    const std::int64_t p = mod.p();
    std::vector<Torus> out;
    std::set<std::array<std::int64_t, 3>> seen;
    for (std::int64_t u = 0; u < p; ++u)
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c) {
                if (u == 0 && b == 0 && c == 0) continue;
                // canonicalize the line: first nonzero coordinate scaled to 1
                std::int64_t f = u != 0 ? u : (b != 0 ? b : c);
                const std::int64_t fi = mod.inv(f);
                std::array<std::int64_t, 3> key{u * fi % p, b * fi % p, c * fi % p};
                if (!seen.insert(key).second) continue;
                // g = alpha I + beta g0 has tr^2 - 4 = -4 beta^2 det(g0), so the
                // kind of the whole line is sigma(-det(g0)).
                const std::int64_t det0 = mod.reduce(-key[0] * key[0] - key[1] * key[2]);
                const int s = mod.legendre(mod.reduce(-det0));
                if (s == 0) continue;  // unipotent line, no torus
                const TorusKind k = s == 1 ? TorusKind::split : TorusKind::nonsplit;
                if (k != kind) continue;
                Torus t = torus_from_traceless(key[0], key[1], key[2], mod, k);
                t.id = static_cast<std::int64_t>(out.size());
                out.push_back(std::move(t));
            }
    const std::int64_t expected =
        kind == TorusKind::split ? p * (p + 1) / 2 : p * (p - 1) / 2;
    if (static_cast<std::int64_t>(out.size()) != expected)
        throw Error("torus census mismatch for p = " + std::to_string(p));
    return out;
}

std::vector<Torus> enumerate_all_tori(const PrimeModulus& mod) {
    std::vector<Torus> out = enumerate_tori(mod, TorusKind::split);
    std::vector<Torus> ns = enumerate_tori(mod, TorusKind::nonsplit);
    for (auto& t : ns) {
        t.id = static_cast<std::int64_t>(out.size());
        out.push_back(std::move(t));
    }
    return out;
}

const Torus& conjugate_torus(const Torus& t, const SL2Element& g, const std::vector<Torus>& tori) {
    const SL2Element gi = g.inverse();
    std::vector<SL2Element> conj;
    conj.reserve(t.elements.size());
    for (const auto& e : t.elements) conj.push_back(g * e * gi);
    std::sort(conj.begin(), conj.end());
    for (const auto& cand : tori)
        if (cand.kind == t.kind && cand.elements == conj) return cand;
    throw Error("conjugate torus not found in enumeration");
}

}  // namespace osc
