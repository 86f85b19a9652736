#include "maxdet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "maxdet/constructions.hpp"

namespace maxdet {

namespace {

bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool entry_is(const GramMatrix& G, size_t i, size_t j, long v) {
    return G.at(i, j) == CycInt(G.m, Int(v));
}

// Connected components of the graph on 0..n-1 with edges where pred holds.
std::vector<std::vector<size_t>> components(size_t n, const std::function<bool(size_t, size_t)>& pred) {
    std::vector<int> comp(n, -1);
    std::vector<std::vector<size_t>> out;
    for (size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<size_t> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (size_t w = 0; w < n; ++w) {
                if (comp[w] < 0 && w != v && pred(v, w)) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

}  // namespace

Int sigma(unsigned m, unsigned n) {
    if (n == 0) return 0;
    switch (m) {
        case 2: return n % 2;
        case 3: return n % 3 == 0 ? 0 : 1;
        case 4: return n % 2 == 0 ? 0 : 1;
        case 6: return n > 1 ? 0 : 1;
        default: throw std::invalid_argument("sigma: no closed form for this root order");
    }
}

CycInt sigma_general_sq(unsigned m, unsigned n, unsigned cap) {
    if (m < 2) throw std::invalid_argument("sigma_general_sq: m >= 2 required");
    if (n > cap) throw std::invalid_argument("sigma_general_sq: n exceeds the search cap");
    // Enumerate multisets of n roots as compositions of n into m parts.
    std::vector<Int> counts(m, 0);
    bool have = false;
    CycInt best_sq(m);
    double best_val = 0.0;
    const double pi = std::acos(-1.0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned k, unsigned left) {
        if (k + 1 == m) {
            counts[k] = left;
            CycInt z = CycInt::from_coeffs(m, counts);
            CycInt sq = z.abs2_cyc();
            // Numeric value for ordering only; the stored minimum is exact.
            double val = 0.0;
            for (unsigned j = 0; j < m; ++j)
                val += sq.coeffs()[j].get_d() * std::cos(2.0 * pi * j / m);
            if (!have || val < best_val - 1e-9) {
                have = true;
                best_val = val;
                best_sq = sq;
            }
            return;
        }
        for (unsigned c = 0; c <= left; ++c) {
            counts[k] = c;
            rec(k + 1, left - c);
        }
    };
    rec(0, n);
    return best_sq;
}

BoundReport bounds(unsigned n, unsigned m) {
    if (n < 1) throw std::invalid_argument("bounds: n >= 1 required");
    BoundReport r;
    r.n = n;
    r.m = m;
    r.sigma = sigma(m, n);
    r.hadamard_sq = ipow(Int(n), n);
    Int s = r.sigma;
    r.barba_sq = (Int(n) + Int(n - 1) * s) * ipow(Int(n) - s, n - 1);
    r.ew_sq = n >= 2 ? Int(2 * n - 2) * (2 * n - 2) * ipow(Int(n - 2), n - 2) : Int(0);
    r.ehlich_applicable = m == 2 && n % 4 == 3 && n >= 63;
    if (r.ehlich_applicable) {
        Rat coeff(4 * ipow(Int(11), 6), ipow(Int(7), 7));
        coeff.canonicalize();
        r.ehlich_sq = coeff * Rat(Int(n) * ipow(Int(n - 1), 6) * ipow(Int(n - 3), n - 7));
    } else {
        r.ehlich_sq = 0;
    }
    if (m == 2) {
        switch (n % 4) {
            case 0: r.applicable = "hadamard"; break;
            case 2: r.applicable = "ew"; break;
            case 3: r.applicable = n >= 63 ? "ehlich" : "barba"; break;
            default: r.applicable = "barba"; break;
        }
    } else {
        r.applicable = r.sigma == 0 ? "hadamard" : "barba";
    }
    return r;
}

Rat ehlich_block_det(unsigned n, const std::vector<unsigned>& parts) {
    if (parts.empty()) throw std::invalid_argument("ehlich_block_det: empty partition");
    unsigned m = 0;
    for (unsigned r : parts) m += r;
    Int base = Int(n) - 3;
    Rat prod(ipow(base, m - parts.size()));
    Rat tail(1);
    for (unsigned ri : parts) {
        Int blk = base + 4 * Int(ri);
        prod *= Rat(blk);
        Rat term(Int(ri), blk);
        term.canonicalize();
        tail -= term;
    }
    return prod * tail;
}

std::string GramClass::str() const {
    switch (kind) {
        case HADAMARD: return "HADAMARD";
        case BARBA: return "BARBA";
        case EW: return "EW";
        case EHLICH_D: return "EHLICH_D(" + std::to_string(param) + ")";
        case GW: return "GW(" + std::to_string(param) + ")";
        default: return "OTHER";
    }
}

GramClass parse_gram_class(const std::string& tag) {
    GramClass g;
    auto param_of = [&](size_t prefix) {
        if (tag.back() != ')') throw std::invalid_argument("parse_gram_class: malformed tag " + tag);
        return static_cast<unsigned>(std::stoul(tag.substr(prefix, tag.size() - prefix - 1)));
    };
    if (tag == "HADAMARD") g.kind = GramClass::HADAMARD;
    else if (tag == "BARBA") g.kind = GramClass::BARBA;
    else if (tag == "EW") g.kind = GramClass::EW;
    else if (tag == "OTHER") g.kind = GramClass::OTHER;
    else if (tag.rfind("EHLICH_D(", 0) == 0) { g.kind = GramClass::EHLICH_D; g.param = param_of(9); }
    else if (tag.rfind("GW(", 0) == 0) { g.kind = GramClass::GW; g.param = param_of(3); }
    else throw std::invalid_argument("parse_gram_class: unknown tag " + tag);
    return g;
}

GramClass classify_gram(const GramMatrix& G) {
    const size_t n = G.n;
    GramClass out;
    // Diagonal must be a constant rational w (the row weight).
    if (n == 0 || !G.at(0, 0).is_rational()) {
        out.detail = "non-rational diagonal";
        return out;
    }
    Int w = G.at(0, 0).to_int();
    for (size_t i = 1; i < n; ++i)
        if (!(G.at(i, i) == CycInt(G.m, w))) {
            out.detail = "non-constant diagonal";
            return out;
        }

    bool all_zero = true;
    for (size_t i = 0; i < n && all_zero; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && !entry_is(G, i, j, 0)) all_zero = false;
    if (all_zero) {
        out.kind = w == Int(n) ? GramClass::HADAMARD : GramClass::GW;
        if (out.kind == GramClass::GW) out.param = static_cast<unsigned>(w.get_ui());
        return out;
    }

    // The remaining patterns are matched up to conjugation by a diagonal of
    // roots of unity (row scaling of the underlying matrix conjugates its
    // Gram). G matches c_{ij} up to diagonal units iff g_{ij} = c_{ij} d_i
    // conj(d_j) for units d recoverable from any spanning set of entries.
    bool can_abs2 = G.m == 1 || G.m == 2 || G.m == 3 || G.m == 4 || G.m == 6;
    if (w == Int(n) && can_abs2) {
        // c_of(i, j): the target pattern value, or 0 where the pattern has a
        // structural zero. Returns true when G = D C D* for some unit diagonal.
        auto matches = [&](const std::function<long(size_t, size_t)>& c_of) -> bool {
            std::vector<CycInt> dd(n, CycInt(G.m, Int(1)));  // d_i * conj(d_0-of-component)
            std::vector<bool> known(n, false);
            try {
                // Recover d relative to a representative of each connected
                // component of the nonzero pattern.
                auto comps = components(n, [&](size_t a, size_t b) { return c_of(a, b) != 0; });
                for (const auto& comp : comps) {
                    size_t rep = comp.front();
                    known[rep] = true;
                    bool grew = true;
                    while (grew) {
                        grew = false;
                        for (size_t i : comp) {
                            if (known[i]) continue;
                            for (size_t j : comp) {
                                long c = c_of(i, j);
                                if (c == 0 || !known[j]) continue;
                                // g_ij = c d_i conj(d_j) => d_i = g_ij d_j / c.
                                dd[i] = (G.at(i, j) * dd[j]).divide_exact(Int(c));
                                if (dd[i].abs2() != 1) return false;
                                known[i] = grew = true;
                                break;
                            }
                        }
                    }
                    for (size_t i : comp)
                        if (!known[i]) return false;
                }
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j) {
                        if (i == j) continue;
                        long c = c_of(i, j);
                        if (!(G.at(i, j) == CycInt(G.m, Int(c)) * dd[i] * dd[j].conj())) return false;
                    }
            } catch (const std::exception&) {
                return false;
            }
            return true;
        };

        if (matches([](size_t, size_t) { return 1; })) {
            out.kind = GramClass::BARBA;
            return out;
        }

        if (n % 2 == 0) {
            // EW: entries of squared modulus 4 within two halves, 0 across.
            auto comps = components(n, [&](size_t a, size_t b) { return G.at(a, b).abs2() == 4; });
            if (comps.size() == 2 && comps[0].size() == n / 2 && comps[1].size() == n / 2) {
                std::vector<int> half(n);
                for (size_t i : comps[1]) half[i] = 1;
                if (matches([&](size_t a, size_t b) { return half[a] == half[b] ? 2 : 0; })) {
                    out.kind = GramClass::EW;
                    return out;
                }
            }
        }

        if (n % 7 == 0) {
            // D(m): entries of squared modulus 9 forming 7 disjoint m-cliques,
            // squared modulus 1 (pattern value -1) elsewhere.
            size_t m = n / 7;
            auto comps = components(n, [&](size_t a, size_t b) { return G.at(a, b).abs2() == 9; });
            bool shape = comps.size() == 7;
            for (const auto& c : comps)
                if (c.size() != m) shape = false;
            if (shape) {
                std::vector<int> clique(n);
                for (size_t k = 0; k < comps.size(); ++k)
                    for (size_t i : comps[k]) clique[i] = static_cast<int>(k);
                if (matches([&](size_t a, size_t b) { return clique[a] == clique[b] ? 3 : -1; })) {
                    out.kind = GramClass::EHLICH_D;
                    out.param = static_cast<unsigned>(m);
                    return out;
                }
            }
        }
    }

    // No match: report the distinct off-diagonal values seen.
    std::map<std::string, size_t> seen;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) ++seen[G.at(i, j).str()];
    std::ostringstream os;
    os << "off-diagonal values:";
    for (const auto& [v, cnt] : seen) os << " [" << v << "] x" << cnt;
    out.detail = os.str();
    return out;
}

DivisibilityReport divisibility_check(const RootMatrix& M) {
    DivisibilityReport r;
    switch (M.m) {
        case 3: r.base = 3; break;
        case 4: r.base = 2; break;
        case 1:
        case 2: r.base = 4; break;
        default: throw std::invalid_argument("divisibility_check: root order must be in {1,2,3,4}");
    }
    r.det_sq = det_abs2(M);
    r.det_ok = M.n <= 1 || divides(ipow(r.base, M.n - 1), r.det_sq);
    r.charpoly = charpoly_int(gram(M));
    r.charpoly_ok = true;
    for (size_t i = 1; i < r.charpoly.size(); ++i)
        if (!divides(ipow(r.base, i - 1), r.charpoly[i])) r.charpoly_ok = false;
    return r;
}

PaleyAnalysis paley_det(const Int& p) {
    if (!is_prime(p) || p % 3 != 1)
        throw std::invalid_argument("paley_det: p must be a prime congruent to 1 mod 3");
    PaleyAnalysis a;
    a.p = p;
    CubicDecomp cd = solve_c27d(p);
    a.c = cd.c;
    a.d = cd.d;
    Int f = (p - 1) / 3;
    a.cubic_a1 = -f;
    Int num = p * a.c + 3 * p - 1;
    if (!divides(Int(27), num)) throw std::logic_error("paley_det: period cubic not integral");
    a.cubic_a0 = -num / 27;
    Int q = p + 2;
    a.base = q * q * q - 3 * q * q - 3 * (p - 1) * q + (3 + a.c) * p - 1;
    Int closed = ipow(a.base, f.get_ui());

    RootMatrix Q = paley_core(static_cast<unsigned>(p.get_ui()), 3);
    CMat M = Q.to_cyc();
    for (size_t i = 0; i < Q.n; ++i) M(i, i) = CycInt::root(3, 1);
    CycInt det = det_exact(M);
    a.det_sq = det.abs2();
    if (a.det_sq != closed)
        throw std::logic_error("paley_det: closed form disagrees with the exact determinant");
    a.bordered_det_sq = (p * p + p + 1) * closed;
    return a;
}

VerifyResult verify(const RootMatrix& M, const std::string& claim) {
    VerifyResult r;
    std::ostringstream os;
    if (claim.rfind("MAXDET(", 0) == 0 && claim.back() == ')') {
        Int want(claim.substr(7, claim.size() - 8));
        Int got = det_abs2(M);
        r.ok = got == want;
        os << "|det|^2 = " << got.get_str() << ", claimed " << want.get_str()
           << (r.ok ? " (match; record value, not a maximality certificate)" : " (MISMATCH)");
        r.diagnostics = os.str();
        return r;
    }
    GramClass want = parse_gram_class(claim);
    GramClass got = classify_gram(gram(M));
    r.ok = got == want;
    os << "classified as " << got.str() << ", claimed " << want.str()
       << (r.ok ? " (match)" : " (MISMATCH)");
    if (!got.detail.empty()) os << "; " << got.detail;
    r.diagnostics = os.str();
    return r;
}

}  // namespace maxdet
