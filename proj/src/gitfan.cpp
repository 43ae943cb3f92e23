#include "coxfan/gitfan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <set>
#include <thread>

#include "coxfan/errors.hpp"
#include "coxfan/geometry.hpp"

namespace coxfan {

namespace {

// Chamber identity: which full-dimensional orbit cones contain a generic
// interior point. Constant on chamber interiors, so it is a perfect key.
using Key = std::vector<std::uint64_t>;

struct ConeRef {
    // facet as (arrangement index, required sign)
    std::vector<std::pair<int, int>> facets;
};

struct FanContext {
    int d = 0;
    const RationalCone* support = nullptr;
    std::vector<const RationalCone*> full_dim;
    std::vector<VecZ> arrangement;  // canonical-sign normals, sorted
    std::vector<ConeRef> refs;      // per full_dim cone
    ConeRef support_ref;

    int arr_index(const VecZ& h) const {
        const auto it = std::lower_bound(arrangement.begin(), arrangement.end(), h, lex_less);
        if (it == arrangement.end() || *it != h)
            throw domain_error("gitfan: facet normal missing from the arrangement");
        return static_cast<int>(it - arrangement.begin());
    }

    // signs of w against the whole arrangement; 0 entries mean w is on a wall
    std::vector<int> signs(const VecZ& w) const {
        std::vector<int> s(arrangement.size());
        for (std::size_t i = 0; i < arrangement.size(); ++i) s[i] = sgn(dot(arrangement[i], w));
        return s;
    }

    static bool satisfied(const ConeRef& ref, const std::vector<int>& s) {
        for (const auto& [i, sg] : ref.facets)
            if (s[i] != sg) return false;
        return true;
    }

    bool generic(const std::vector<int>& s) const {
        return std::none_of(s.begin(), s.end(), [](int x) { return x == 0; });
    }

    Key key_of(const std::vector<int>& s) const {
        Key k((full_dim.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < full_dim.size(); ++i)
            if (satisfied(refs[i], s)) k[i >> 6] |= std::uint64_t(1) << (i & 63);
        return k;
    }

    std::vector<VecZ> chamber_inequalities(const Key& k) const {
        // the support's facets always participate, so the result is cut to
        // the support even if the caller's cone list does not include it
        std::vector<VecZ> out = support->facet_normals();
        for (std::size_t i = 0; i < full_dim.size(); ++i)
            if ((k[i >> 6] >> (i & 63)) & 1) {
                const auto& f = full_dim[i]->facet_normals();
                out.insert(out.end(), f.begin(), f.end());
            }
        std::sort(out.begin(), out.end(), lex_less);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

FanContext build_context(const std::vector<RationalCone>& cones, const RationalCone& support) {
    FanContext ctx;
    ctx.d = support.ambient_dim();
    ctx.support = &support;
    std::vector<VecZ> arr;
    for (const auto& c : cones) {
        if (c.ambient_dim() != ctx.d)
            throw dimension_error("gitfan: orbit cone has wrong ambient dimension");
        if (c.full_dimensional()) {
            ctx.full_dim.push_back(&c);
            for (const auto& f : c.facet_normals()) arr.push_back(canonical_sign(f));
        } else {
            // one hyperplane through the span per equation keeps generic
            // points off every lower-dimensional orbit cone
            for (const auto& e : c.span_equations()) arr.push_back(canonical_sign(e));
        }
    }
    for (const auto& f : support.facet_normals()) arr.push_back(canonical_sign(f));
    std::sort(arr.begin(), arr.end(), lex_less);
    arr.erase(std::unique(arr.begin(), arr.end()), arr.end());
    ctx.arrangement = std::move(arr);

    const auto make_ref = [&ctx](const RationalCone& c) {
        ConeRef ref;
        for (const auto& f : c.facet_normals()) {
            const VecZ h = canonical_sign(f);
            ref.facets.emplace_back(ctx.arr_index(h), h == f ? 1 : -1);
        }
        return ref;
    };
    for (const auto* c : ctx.full_dim) ctx.refs.push_back(make_ref(*c));
    ctx.support_ref = make_ref(support);
    return ctx;
}

// Positive combination sum t^j * gens[j] that avoids every arrangement
// hyperplane except those in `allowed` (canonical-sign forms). Vandermonde:
// each excluded hyperplane not containing all generators rules out finitely
// many t.
VecZ generic_combination(const FanContext& ctx, const std::vector<VecZ>& gens,
                         const std::vector<VecZ>& allowed) {
    const int d = ctx.d;
    for (Int t = 1;; ++t) {
        VecZ v(d, Int(0));
        Int p = 1;
        for (const auto& g : gens) {
            for (int i = 0; i < d; ++i) v[i] += p * g[i];
            p *= t;
        }
        bool ok = true;
        for (const auto& h : ctx.arrangement) {
            if (dot(h, v) != 0) continue;
            if (std::find(allowed.begin(), allowed.end(), h) == allowed.end()) {
                ok = false;
                break;
            }
        }
        if (ok) return primitive(std::move(v));
        if (t > 10000) throw budget_error("gitfan: generic combination search exhausted");
    }
}

// Exact step across a chamber facet: from a relative-interior point v of
// the facet, move against the inward normal by half the distance to the
// nearest non-incident arrangement hyperplane.
VecZ cross_facet(const FanContext& ctx, const VecZ& v, const VecZ& inward) {
    Rat best(-1);
    for (const auto& h : ctx.arrangement) {
        const Int hv = dot(h, v);
        const Int hf = dot(h, inward);
        if (hv == 0 || hf == 0) continue;
        Rat c(abs(hv), abs(hf));
        c.canonicalize();
        if (best < 0 || c < best) best = c;
    }
    const Rat step = best < 0 ? Rat(1) : best / 2;
    VecQ w(ctx.d);
    for (int i = 0; i < ctx.d; ++i) w[i] = Rat(v[i]) - step * Rat(inward[i]);
    return integer_primitive(w);
}

struct Expansion {
    RationalCone cone;
    std::vector<Key> neighbours;
};

Expansion expand_chamber(const FanContext& ctx, const Key& key) {
    Expansion out;
    out.cone = RationalCone::from_constraints(ctx.d, {}, ctx.chamber_inequalities(key));
    const auto& rays = out.cone.extremal_rays();
    for (const auto& f : out.cone.facet_normals()) {
        std::vector<VecZ> frays;
        for (const auto& r : rays)
            if (dot(f, r) == 0) frays.push_back(r);
        const VecZ v = generic_combination(ctx, frays, {canonical_sign(f)});
        const VecZ w = cross_facet(ctx, v, f);
        const std::vector<int> s = ctx.signs(w);
        if (!FanContext::satisfied(ctx.support_ref, s)) continue;  // support boundary
        out.neighbours.push_back(ctx.key_of(s));
    }
    return out;
}

}  // namespace

RationalCone chamber_of(const VecQ& w, const std::vector<RationalCone>& cones,
                        const RationalCone& support) {
    const FanContext ctx = build_context(cones, support);
    const VecZ wz = integer_primitive(w);
    if (wz.empty() || static_cast<int>(wz.size()) != ctx.d)
        throw dimension_error("chamber_of: point has wrong dimension");
    const std::vector<int> s = ctx.signs(wz);
    if (!FanContext::satisfied(ctx.support_ref, s)) {
        // distinguish wall-of-support from genuinely outside
        if (support.contains(w))
            throw wall_error("chamber_of: point lies on the support boundary");
        throw domain_error("chamber_of: point lies outside the support");
    }
    if (!ctx.generic(s))
        throw wall_error("chamber_of: point lies on a wall hyperplane; perturb and retry");
    return RationalCone::from_constraints(ctx.d, {}, ctx.chamber_inequalities(ctx.key_of(s)));
}

ChamberSet mori_chamber_decomposition(const CoxPresentation& pres, int jobs,
                                      std::size_t max_chambers) {
    if (pres.n < 2) throw input_error("mori_chamber_decomposition: n >= 2 required");
    if (jobs < 1) throw input_error("mori_chamber_decomposition: jobs >= 1 required");

    const int d = pres.n + 3;
    const std::vector<RationalCone> cones = orbit_cones(pres);
    const RationalCone support = RationalCone::from_generators_z(d, generator_degrees(pres));
    const FanContext ctx = build_context(cones, support);

    // seed: generic interior point of the nef chamber
    const RationalCone nef = nef_cone(Signature(pres.n, pres.n + 1));
    const VecZ w0 = generic_combination(ctx, nef.extremal_rays(), {});
    {
        const auto s = ctx.signs(w0);
        if (!FanContext::satisfied(ctx.support_ref, s))
            throw domain_error("gitfan: nef seed fell outside the support");
    }

    std::set<Key> discovered;
    std::vector<ChamberSet::Chamber> chambers;
    std::vector<Key> frontier{ctx.key_of(ctx.signs(w0))};
    discovered.insert(frontier[0]);

    while (!frontier.empty()) {
        if (discovered.size() > max_chambers)
            throw budget_error("gitfan: traversal budget exceeded; partial chamber count " +
                               std::to_string(discovered.size()));
        std::vector<Expansion> results(frontier.size());
        const int workers = std::min<int>(jobs, static_cast<int>(frontier.size()));
        if (workers <= 1) {
            for (std::size_t i = 0; i < frontier.size(); ++i)
                results[i] = expand_chamber(ctx, frontier[i]);
        } else {
            std::vector<std::thread> pool;
            std::atomic<std::size_t> next{0};
            for (int t = 0; t < workers; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i = next.fetch_add(1); i < frontier.size();
                         i = next.fetch_add(1))
                        results[i] = expand_chamber(ctx, frontier[i]);
                });
            for (auto& th : pool) th.join();
        }
        // deterministic merge: results visited in frontier order, new keys
        // gathered in canonical (set) order
        std::set<Key> fresh;
        for (const auto& exp : results)
            for (const auto& k : exp.neighbours)
                if (!discovered.count(k)) fresh.insert(k);
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            ChamberSet::Chamber ch;
            ch.cone = std::move(results[i].cone);
            ch.interior_point = ch.cone.relative_interior_point();
            chambers.push_back(std::move(ch));
        }
        frontier.assign(fresh.begin(), fresh.end());
        discovered.insert(fresh.begin(), fresh.end());
    }

    std::sort(chambers.begin(), chambers.end(),
              [](const ChamberSet::Chamber& a, const ChamberSet::Chamber& b) {
                  return a.cone.extremal_rays() < b.cone.extremal_rays();
              });
    ChamberSet cs;
    cs.chambers = std::move(chambers);
    cs.support = support;
    return cs;
}

std::size_t chamber_count(const CoxPresentation& pres, int jobs) {
    return mori_chamber_decomposition(pres, jobs).chambers.size();
}

LocateResult locate(const DivisorVector& D, const ChamberSet& cs) {
    if (!cs.support.contains(D.coeffs))
        throw domain_error("locate: divisor class lies outside the effective cone");
    LocateResult res;
    for (std::size_t i = 0; i < cs.chambers.size(); ++i) {
        if (cs.chambers[i].cone.contains(D.coeffs, /*strict=*/true)) {
            res.on_wall = false;
            res.chamber = i;
            return res;
        }
        if (cs.chambers[i].cone.contains(D.coeffs)) res.incident.push_back(i);
    }
    res.on_wall = true;
    return res;
}

}  // namespace coxfan
