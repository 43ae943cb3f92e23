#include "coxfan/geometry.hpp"

#include <algorithm>
#include <functional>

#include "coxfan/errors.hpp"

namespace coxfan {

namespace {

// Run fn on every size-t subset of {0..m-1}, in lexicographic order.
void for_each_subset(int m, int t, const std::function<void(const std::vector<int>&)>& fn) {
    if (t > m || t < 0) return;
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = t - 1;
        while (i >= 0 && idx[i] == m - t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

VecZ unit(int d, int i) {
    VecZ v(d, Int(0));
    v[i] = 1;
    return v;
}

void require_supported(Signature sig, const char* what) {
    if (!signature_supported(sig))
        throw unsupported_signature_error(std::string(what) + ": " + sig.str() +
                                          " is outside the determined range (r <= n+2, or r = "
                                          "n+3 with n <= 4)");
}

}  // namespace

bool signature_supported(Signature sig) {
    return sig.r <= sig.n + 2 || (sig.r == sig.n + 3 && sig.n <= 4);
}

RationalCone mori_cone(Signature sig) {
    require_supported(sig, "mori_cone");
    const int n = sig.n, r = sig.r, d = sig.rank();
    std::vector<VecZ> gens;
    if (r == 0) {
        // no exceptional classes: the cone of curves of P^1 x P^n itself
        gens.push_back(unit(d, 0));
        gens.push_back(unit(d, 1));
        return RationalCone::from_generators_z(d, gens);
    }
    for (int i = 0; i < r; ++i) {
        VecZ a = unit(d, 0);
        a[2 + i] = -1;
        gens.push_back(std::move(a));  // h1 - e_i
        VecZ b = unit(d, 1);
        b[2 + i] = -1;
        gens.push_back(std::move(b));  // h2 - e_i
        gens.push_back(unit(d, 2 + i));  // e_i
    }
    if (r == n + 2) {
        VecZ v(d, Int(-1));
        v[0] = 1;
        v[1] = n;
        gens.push_back(std::move(v));  // h1 + n h2 - e_1 - ... - e_{n+2}
    } else if (r == n + 3) {
        for_each_subset(r, n + 2, [&](const std::vector<int>& S) {
            VecZ v(d, Int(0));
            v[0] = 1;
            v[1] = n;
            for (int i : S) v[2 + i] = -1;
            gens.push_back(std::move(v));
        });
    }
    return RationalCone::from_generators_z(d, gens);
}

RationalCone nef_cone(Signature sig) {
    require_supported(sig, "nef_cone");
    const int n = sig.n, r = sig.r, d = sig.rank();
    std::vector<VecZ> gens{unit(d, 0), unit(d, 1)};
    // H1 + H2 - E_S over nonempty subsets of size <= min(r, n+1)
    const int tmax = std::min(r, n + 1);
    for (int t = 1; t <= tmax; ++t)
        for_each_subset(r, t, [&](const std::vector<int>& S) {
            VecZ v(d, Int(0));
            v[0] = 1;
            v[1] = 1;
            for (int i : S) v[2 + i] = -1;
            gens.push_back(std::move(v));
        });
    if (r == n + 2) {
        VecZ a(d, Int(-1));
        a[0] = 2;
        a[1] = 1;
        gens.push_back(std::move(a));  // 2H1 + H2 - sum E
        VecZ b(d, Int(-n));
        b[0] = n;
        b[1] = n + 1;
        gens.push_back(std::move(b));  // nH1 + (n+1)H2 - n sum E
    } else if (r == n + 3) {
        for (int rr = n + 2; rr <= n + 3; ++rr) {
            for_each_subset(r, rr, [&](const std::vector<int>& S) {
                VecZ a(d, Int(0));
                a[0] = 2;
                a[1] = 1;
                VecZ b(d, Int(0));
                b[0] = n;
                b[1] = n + 1;
                for (int i : S) {
                    a[2 + i] = -1;
                    b[2 + i] = -n;
                }
                gens.push_back(std::move(a));
                gens.push_back(std::move(b));
            });
        }
        // k(H1+H2) with coefficient k on s = n-k+2 chosen indices and k-1 on
        // the rest; the displayed index pattern is normalized this way and
        // validated against the pairing-dual of the Mori cone.
        for (int k = 2; k <= n + 1; ++k) {
            const int s = n - k + 2;
            for_each_subset(r, s, [&](const std::vector<int>& S) {
                VecZ v(d, Int(-(k - 1)));
                v[0] = k;
                v[1] = k;
                for (int i : S) v[2 + i] = -k;
                gens.push_back(std::move(v));
            });
        }
    }
    return RationalCone::from_generators_z(d, gens);
}

RationalCone dual_via_pairing(const RationalCone& c) {
    const int d = c.ambient_dim();
    std::vector<VecZ> gens;
    gens.reserve(c.facet_normals().size());
    for (VecZ f : c.facet_normals()) {
        for (int i = 2; i < d; ++i) f[i] = -f[i];
        gens.push_back(std::move(f));
    }
    return RationalCone::from_generators_z(d, gens);
}

RationalCone movable_cone(int n) {
    if (n < 1) throw input_error("movable_cone: n >= 1 required");
    const int r = n + 1, d = r + 2;
    std::vector<VecZ> gens;
    gens.push_back(unit(d, 0));  // H1
    for (int h = 0; h <= n - 1; ++h)
        for_each_subset(r, h, [&](const std::vector<int>& S) {
            VecZ v = unit(d, 1);  // H2 - E_{i_1} - ... - E_{i_h}
            for (int i : S) v[2 + i] = -1;
            gens.push_back(std::move(v));
        });
    for_each_subset(r, n, [&](const std::vector<int>& S) {
        VecZ v(d, Int(0));
        v[0] = 1;
        v[1] = 1;
        for (int i : S) v[2 + i] = -1;
        gens.push_back(std::move(v));  // H1 + H2 - E_{i_1} - ... - E_{i_n}
    });
    {
        VecZ v(d, Int(-1));
        v[0] = 1;
        v[1] = 1;
        gens.push_back(std::move(v));  // H1 + H2 - E_1 - ... - E_{n+1}
    }
    for (int k = 2; k <= n - 1; ++k)
        for_each_subset(r, n - k, [&](const std::vector<int>& S) {
            VecZ v(d, Int(-(k - 1)));
            v[0] = 0;
            v[1] = k;
            for (int i : S) v[2 + i] = -k;
            gens.push_back(std::move(v));
        });
    {
        VecZ v(d, Int(-(n - 1)));
        v[0] = 0;
        v[1] = n;
        gens.push_back(std::move(v));  // nH2 - (n-1)(E_1 + ... + E_{n+1})
    }
    return RationalCone::from_generators_z(d, gens);
}

RationalCone moving_curve_cone(int n) {
    if (n < 1) throw input_error("moving_curve_cone: n >= 1 required");
    const int r = n + 1, d = r + 2;
    std::vector<VecZ> gens;
    gens.push_back(unit(d, 0));  // h1
    for (int i = 0; i < r; ++i) {
        VecZ v = unit(d, 1);
        v[2 + i] = -1;
        gens.push_back(std::move(v));  // h2 - e_i
    }
    for_each_subset(r, n, [&](const std::vector<int>& S) {
        VecZ v(d, Int(0));
        v[0] = 1;
        v[1] = n - 1;
        for (int i : S) v[2 + i] = -1;
        gens.push_back(std::move(v));  // h1 + (n-1)h2 - e_{i_1} - ... - e_{i_n}
    });
    for (int i = 0; i < r; ++i) gens.push_back(unit(d, 2 + i));  // e_i
    return RationalCone::from_generators_z(d, gens);
}

RationalCone effective_cone(int n) {
    if (n < 1) throw input_error("effective_cone: n >= 1 required");
    const int r = n + 1, d = r + 2;
    std::vector<VecZ> gens;
    for (int i = 0; i < r; ++i) {
        VecZ v(d, Int(-1));
        v[0] = 0;
        v[1] = 1;
        v[2 + i] = 0;
        gens.push_back(std::move(v));  // H2 - sum E + E_i
    }
    for (int i = 0; i < r; ++i) {
        VecZ v = unit(d, 0);
        v[2 + i] = -1;
        gens.push_back(std::move(v));  // H1 - E_i
    }
    for (int i = 0; i < r; ++i) gens.push_back(unit(d, 2 + i));  // E_i
    return RationalCone::from_generators_z(d, gens);
}

namespace {

// One table row: coefficient on hbar, then (e-coefficient, how many points
// receive it) groups; remaining points get 0.
struct DelPezzoRow {
    int h;
    std::vector<std::pair<int, int>> groups;
};

std::vector<DelPezzoRow> del_pezzo_table(int degree) {
    switch (degree) {
        case 3:
            return {{0, {{1, 1}}},           // ebar_i
                    {1, {{-1, 2}}},          // hbar - ebar_i - ebar_j
                    {2, {{-1, 5}}}};         // 2hbar - five ebar
        case 2:
            return {{0, {{1, 1}}},
                    {1, {{-1, 2}}},
                    {2, {{-1, 5}}},
                    {3, {{-2, 1}, {-1, 6}}}};
        case 1:
            return {{0, {{1, 1}}},
                    {1, {{-1, 2}}},
                    {2, {{-1, 5}}},
                    {3, {{-2, 1}, {-1, 6}}},
                    {4, {{-2, 3}, {-1, 5}}},
                    {5, {{-2, 6}, {-1, 2}}},
                    {6, {{-3, 1}, {-2, 7}}}};
        default:
            throw input_error("del_pezzo table: degree must be 1, 2 or 3");
    }
}

// Expand a row over all assignments of coefficient groups to points.
void expand_row(const DelPezzoRow& row, int npoints, std::vector<VecZ>& out) {
    const int d = npoints + 1;
    std::vector<int> remaining(npoints);
    for (int i = 0; i < npoints; ++i) remaining[i] = i;
    std::function<void(std::size_t, std::vector<int>&, VecZ&)> rec =
        [&](std::size_t gi, std::vector<int>& avail, VecZ& acc) {
            if (gi == row.groups.size()) {
                out.push_back(acc);
                return;
            }
            const auto [coeff, count] = row.groups[gi];
            for_each_subset(static_cast<int>(avail.size()), count,
                            [&](const std::vector<int>& S) {
                                std::vector<int> next;
                                std::vector<char> taken(avail.size(), 0);
                                for (int s : S) taken[s] = 1;
                                for (std::size_t a = 0; a < avail.size(); ++a)
                                    if (!taken[a]) next.push_back(avail[a]);
                                for (int s : S) acc[1 + avail[s]] = coeff;
                                rec(gi + 1, next, acc);
                                for (int s : S) acc[1 + avail[s]] = 0;
                            });
        };
    VecZ acc(d, Int(0));
    acc[0] = row.h;
    rec(0, remaining, acc);
}

}  // namespace

std::vector<VecZ> del_pezzo_mori_rays(int degree) {
    const int npoints = 9 - degree;
    std::vector<VecZ> out;
    for (const auto& row : del_pezzo_table(degree)) expand_row(row, npoints, out);
    return out;
}

std::vector<std::size_t> del_pezzo_row_sizes(int degree) {
    const int npoints = 9 - degree;
    std::vector<std::size_t> sizes;
    for (const auto& row : del_pezzo_table(degree)) {
        std::vector<VecZ> tmp;
        expand_row(row, npoints, tmp);
        sizes.push_back(tmp.size());
    }
    return sizes;
}

std::vector<VecZ> del_pezzo_embedding(int n) {
    // source lattice (hbar, ebar_1..ebar_m), m = 9-degree = n+4;
    // target curve lattice of X^{1,n}_{n+3}, dimension n+5
    const int d = n + 5;
    const int m = n + 4;
    auto cls = [&](int c1, int c2, std::initializer_list<std::pair<int, int>> es) {
        VecZ v(d, Int(0));
        v[0] = c1;
        v[1] = c2;
        for (auto [i, c] : es) v[2 + (i - 1)] = c;
        return v;
    };
    std::vector<VecZ> cols(1 + m);
    switch (n) {
        case 2:
            cols[0] = cls(1, 1, {});   // hbar -> h1 + h2
            cols[1] = cls(1, 0, {});   // ebar_1 -> h1
            for (int i = 2; i <= m; ++i) cols[i] = cls(0, 0, {{i - 1, 1}});
            break;
        case 3:
            cols[0] = cls(1, 2, {{1, -1}});  // hbar -> h1 + 2h2 - e1
            cols[1] = cls(0, 1, {{1, -1}});  // ebar_1 -> h2 - e1
            cols[2] = cls(1, 1, {{1, -1}});  // ebar_2 -> h1 + h2 - e1
            for (int i = 3; i <= m; ++i) cols[i] = cls(0, 0, {{i - 1, 1}});
            break;
        case 4:
            cols[0] = cls(1, 2, {});   // hbar -> h1 + 2h2
            cols[1] = cls(1, 1, {});   // ebar_1 -> h1 + h2
            for (int i = 2; i <= m; ++i) cols[i] = cls(0, 0, {{i - 1, 1}});
            break;
        default:
            throw input_error("del_pezzo_embedding: n must be 2, 3 or 4");
    }
    return cols;
}

CurveVector del_pezzo_image(int n, const VecZ& del_pezzo_class) {
    const auto cols = del_pezzo_embedding(n);
    if (del_pezzo_class.size() != cols.size())
        throw dimension_error("del_pezzo_image: class has wrong length");
    const Signature sig(n, n + 3);
    VecQ out(sig.rank(), Rat(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < sig.rank(); ++i) out[i] += Rat(del_pezzo_class[j]) * Rat(cols[j][i]);
    return {sig, std::move(out)};
}

bool verify_del_pezzo_embedding(int n) {
    static const int degree_for_n[] = {0, 0, 3, 2, 1};
    if (n < 2 || n > 4) throw input_error("verify_del_pezzo_embedding: n must be 2, 3 or 4");
    const RationalCone mori = mori_cone(Signature(n, n + 3));
    for (const auto& ray : del_pezzo_mori_rays(degree_for_n[n])) {
        const CurveVector img = del_pezzo_image(n, ray);
        if (!mori.contains(img.coeffs)) return false;
    }
    return true;
}

namespace {
bool positive_on_mori(const DivisorVector& D, bool strict) {
    const RationalCone mori = mori_cone(D.sig);
    for (const auto& ray : mori.extremal_rays()) {
        const CurveVector C(D.sig, to_rational(ray));
        const Rat p = pairing(D, C);
        if (strict ? p <= 0 : p < 0) return false;
    }
    return true;
}
}  // namespace

bool is_nef(const DivisorVector& D) { return positive_on_mori(D, false); }
bool is_ample(const DivisorVector& D) { return positive_on_mori(D, true); }

std::pair<Rat, Rat> log_fano_interval(int n) {
    if (n < 1) throw input_error("log_fano_interval: n >= 1 required");
    return {Rat(n - 2) / Rat(n), Rat(1)};
}

bool ct_criterion(int s, int n, int r) {
    if (s < 1 || n < 1) throw input_error("ct_criterion: s >= 1 and n >= 1 required");
    if (r <= n + 1) throw domain_error("ct_criterion: requires r >= n+2");
    return Rat(1, s + 1) + Rat(1, r - n - 1) + Rat(1, n + 1) > 1;
}

std::pair<int, int> scroll_type(int n) {
    if (n < 1) throw input_error("scroll_type: n >= 1 required");
    if (n % 2 == 1) return {(n + 1) / 2, (n + 1) / 2};
    return {n / 2, (n + 2) / 2};
}

}  // namespace coxfan
