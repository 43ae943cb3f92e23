#include "coxfan/coxring.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "coxfan/errors.hpp"

namespace coxfan {

Rat PointConfig::minor(int i, int j) const {
    const auto& [ai, bi] = points.at(i - 1);
    const auto& [aj, bj] = points.at(j - 1);
    return bi * aj - bj * ai;
}

void PointConfig::validate() const {
    if (n < 1) throw degenerate_error("point config: n >= 1 required");
    if (static_cast<int>(points.size()) != n + 1)
        throw degenerate_error("point config: expected n+1 points");
    const std::vector<std::pair<Rat, Rat>> fixed = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)},
                                                    {Rat(1), Rat(1)}};
    for (int i = 0; i < std::min(3, n + 1); ++i)
        if (points[i] != fixed[i])
            throw degenerate_error("point config: first three points must be [0,1],[1,0],[1,1]");
    for (int i = 1; i <= n + 1; ++i) {
        const auto& [a, b] = points[i - 1];
        if (a == 0 && b == 0) throw degenerate_error("point config: [0,0] is not a point");
        for (int j = i + 1; j <= n + 1; ++j)
            if (minor(i, j) == 0)
                throw degenerate_error("point config: points " + std::to_string(i) + "," +
                                       std::to_string(j) + " coincide");
    }
}

PointConfig sample_points(int n, std::uint64_t seed) {
    if (n < 1) throw input_error("sample_points: n >= 1 required");
    PointConfig cfg;
    cfg.n = n;
    cfg.points = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
    cfg.points.resize(std::min(3, n + 1));
    std::mt19937_64 gen(seed);
    int attempts = 0;
    while (static_cast<int>(cfg.points.size()) < n + 1) {
        if (++attempts > 1000)
            throw budget_error("sample_points: 1000 attempts exhausted without a general config");
        // small-height rational value p/q, realized as [p, q]
        const long p = static_cast<long>(gen() % 201) - 100;  // -100..100
        const long q = static_cast<long>(gen() % 100) + 1;    // 1..100
        Rat a(p, q);
        a.canonicalize();
        const std::pair<Rat, Rat> cand{a, Rat(1)};
        bool ok = true;
        for (const auto& [a0, b0] : cfg.points)
            if (b0 * cand.first - cand.second * a0 == 0) {
                ok = false;
                break;
            }
        if (ok) cfg.points.push_back(cand);
    }
    cfg.validate();
    return cfg;
}

CoxPresentation build_presentation(int n, const PointConfig& config) {
    if (n < 1) throw input_error("build_presentation: n >= 1 required");
    if (config.n != n) throw input_error("build_presentation: config has wrong n");
    config.validate();

    CoxPresentation pres;
    pres.n = n;
    pres.config = config;
    const Signature sig(n, n + 1);

    for (int i = 0; i <= n; ++i) {
        // S_i: section of the hyperplane y_i = 0, which misses the (i+1)-st point
        DivisorVector deg = divisor_H2(sig);
        for (int j = 1; j <= n + 1; ++j)
            if (j != i + 1) deg -= divisor_E(sig, j);
        pres.generators.push_back({"S" + std::to_string(i), std::move(deg)});
    }
    for (int i = 1; i <= n + 1; ++i) {
        pres.generators.push_back(
            {"T" + std::to_string(i) + ",1", divisor_H1(sig) - divisor_E(sig, i)});
        pres.generators.push_back({"T" + std::to_string(i) + ",2", divisor_E(sig, i)});
    }

    for (int i = 1; i <= n - 1; ++i) {
        const int j = i + 1, k = i + 2;
        const Rat c1 = config.minor(k, j);  // beta_k alpha_j - beta_j alpha_k
        const Rat c2 = config.minor(i, k);
        const Rat c3 = config.minor(j, i);
        if (c1 == 0 || c2 == 0 || c3 == 0)
            throw degenerate_error("build_presentation: vanishing relation coefficient");
        pres.relations.push_back(CoxPresentation::Trinomial{
            CoxPresentation::Monomial{c1, {pres.t_index(i, 1), pres.t_index(i, 2)}},
            CoxPresentation::Monomial{c2, {pres.t_index(j, 1), pres.t_index(j, 2)}},
            CoxPresentation::Monomial{c3, {pres.t_index(k, 1), pres.t_index(k, 2)}}});
    }
    return pres;
}

bool check_homogeneity(const CoxPresentation& pres) {
    for (const auto& rel : pres.relations) {
        const auto deg_of = [&](const CoxPresentation::Monomial& m) {
            return pres.generators[m.factors.first].degree +
                   pres.generators[m.factors.second].degree;
        };
        const DivisorVector d0 = deg_of(rel[0]);
        if (!(deg_of(rel[1]) == d0) || !(deg_of(rel[2]) == d0)) return false;
    }
    return true;
}

namespace {

// Basis of {w in span{alpha,beta} : w_i = 0 for i in zeros}, as coefficient
// pairs (x, y) with w = x*alpha + y*beta.
std::vector<std::pair<Rat, Rat>> plane_subspace(const PointConfig& cfg,
                                                const std::vector<int>& zeros) {
    // constraints: x*alpha_i + y*beta_i = 0
    std::vector<std::pair<Rat, Rat>> rows;
    for (int i : zeros) rows.push_back(cfg.points[i]);
    // rank of the 2-column system
    std::pair<Rat, Rat> first{0, 0};
    bool have_first = false;
    for (const auto& row : rows) {
        if (row.first == 0 && row.second == 0) continue;
        if (!have_first) {
            first = row;
            have_first = true;
            continue;
        }
        if (first.first * row.second - first.second * row.first != 0)
            return {};  // rank 2: only the origin
    }
    if (!have_first) return {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    // rank 1: the constraint row (a, b) kills (x, y) with x*a + y*b = 0
    return {{-first.second, first.first}};
}

}  // namespace

std::vector<AFace> a_faces(const CoxPresentation& pres) {
    const int n = pres.n;
    const int r = n + 1;
    const int m = 3 * r;
    if (m > 27)
        throw budget_error("a_faces: 2^" + std::to_string(m) +
                           " supports exceed the enumeration budget");
    const PointConfig& cfg = pres.config;
    std::vector<AFace> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
        std::vector<int> need_nonzero, need_zero;
        for (int i = 0; i < r; ++i) {
            const bool t1 = (mask >> pres.t_index(i + 1, 1)) & 1;
            const bool t2 = (mask >> pres.t_index(i + 1, 2)) & 1;
            if (t1 && t2)
                need_nonzero.push_back(i);
            else
                need_zero.push_back(i);
        }
        const auto basis = plane_subspace(cfg, need_zero);
        bool feasible;
        if (need_nonzero.empty()) {
            feasible = true;  // w = 0 works
        } else if (basis.empty()) {
            feasible = false;
        } else {
            const auto coord = [&](const std::pair<Rat, Rat>& xy, int i) -> Rat {
                return xy.first * cfg.points[i].first + xy.second * cfg.points[i].second;
            };
            // witness as a generic combination of the basis; each required
            // coordinate rules out at most one combination parameter
            feasible = false;
            bool identically_zero = false;
            for (int i : need_nonzero) {
                bool all_zero = true;
                for (const auto& b : basis)
                    if (coord(b, i) != 0) all_zero = false;
                if (all_zero) {
                    identically_zero = true;
                    break;
                }
            }
            if (!identically_zero) {
                for (int t = 0; t < 100 && !feasible; ++t) {
                    std::pair<Rat, Rat> w = basis[0];
                    if (basis.size() == 2) {
                        w.first += Rat(t) * basis[1].first;
                        w.second += Rat(t) * basis[1].second;
                    }
                    bool ok = true;
                    for (int i : need_nonzero)
                        if (coord(w, i) == 0) {
                            ok = false;
                            break;
                        }
                    if (ok) feasible = true;
                    if (basis.size() == 1) break;
                }
                if (!feasible && basis.size() == 2)
                    throw budget_error(
                        "a_faces: witness search exhausted 100 combinations without a "
                        "certificate");
            }
        }
        if (feasible) out.push_back({mask});
    }
    return out;
}

std::vector<VecZ> generator_degrees(const CoxPresentation& pres) {
    std::vector<VecZ> out;
    out.reserve(pres.generators.size());
    for (const auto& g : pres.generators) out.push_back(integer_primitive(g.degree.coeffs));
    return out;
}

namespace {
RationalCone subset_cone(const std::vector<VecZ>& degs, int d, std::uint32_t subset) {
    std::vector<VecZ> gens;
    for (std::size_t i = 0; i < degs.size(); ++i)
        if ((subset >> i) & 1) gens.push_back(degs[i]);
    return RationalCone::from_generators_z(d, gens);
}
}  // namespace

RationalCone a_face_orbit_cone(const CoxPresentation& pres, const AFace& face) {
    return subset_cone(generator_degrees(pres), pres.n + 3, face.subset);
}

std::vector<RationalCone> orbit_cones(const CoxPresentation& pres) {
    const std::vector<VecZ> degs = generator_degrees(pres);
    std::vector<RationalCone> cones;
    std::map<std::vector<VecZ>, bool> seen;  // key: canonical extremal rays
    for (const AFace& f : a_faces(pres)) {
        RationalCone c = subset_cone(degs, pres.n + 3, f.subset);
        auto [it, inserted] = seen.try_emplace(c.extremal_rays(), true);
        if (inserted) cones.push_back(std::move(c));
    }
    // canonical order: by extremal-ray list
    std::sort(cones.begin(), cones.end(), [](const RationalCone& a, const RationalCone& b) {
        return a.extremal_rays() < b.extremal_rays();
    });
    return cones;
}

}  // namespace coxfan
