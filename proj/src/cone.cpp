#include "coxfan/cone.hpp"

#include <algorithm>
#include <cstdint>

#include "coxfan/errors.hpp"

namespace coxfan {

namespace detail {

int rref(std::vector<VecQ>& rows, std::vector<int>* pivots) {
    const int nr = static_cast<int>(rows.size());
    if (nr == 0) return 0;
    const int nc = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int i = rank; i < nr; ++i)
            if (rows[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        const Rat pv = rows[rank][c];
        for (int j = c; j < nc; ++j) rows[rank][j] /= pv;
        for (int i = 0; i < nr; ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            const Rat f = rows[i][c];
            for (int j = c; j < nc; ++j) rows[i][j] -= f * rows[rank][j];
        }
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    rows.resize(rank, VecQ(nc, Rat(0)));
    return rank;
}

std::vector<VecZ> kernel_basis(const std::vector<VecZ>& rows, int dim) {
    std::vector<VecQ> m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(to_rational(r));
    std::vector<int> pivots;
    const int rank = rref(m, &pivots);
    std::vector<char> is_pivot(dim, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<VecZ> basis;
    for (int f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        VecQ v(dim, Rat(0));
        v[f] = 1;
        for (int i = 0; i < rank; ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(integer_primitive(v));
    }
    std::sort(basis.begin(), basis.end(), lex_less);
    return basis;
}

namespace {

// Tight-inequality bitmask per ray, over inequalities in processed order.
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t nbits) : w((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    static Bits intersect(const Bits& a, const Bits& b) {
        Bits r(a.w.size() * 64);
        for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
        return r;
    }
    bool superset_of(const Bits& s) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if ((w[i] & s.w[i]) != s.w[i]) return false;
        return true;
    }
};

// Greedy choice of `dim` linearly independent rows, in input order.
// The working rows are kept mutually reduced (RREF) so a single
// elimination pass per candidate is sound.
std::vector<int> independent_rows(const std::vector<VecZ>& rows, int dim) {
    const int nc = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    std::vector<VecQ> reduced;          // RREF rows
    std::vector<int> pivot_of;          // pivot column per reduced row
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        VecQ v = to_rational(rows[i]);
        for (std::size_t b = 0; b < reduced.size(); ++b) {
            const int p = pivot_of[b];
            if (v[p] != 0) {
                const Rat f = v[p];  // reduced rows have pivot value 1
                for (int j = 0; j < nc; ++j) v[j] -= f * reduced[b][j];
            }
        }
        int p = 0;
        while (p < nc && v[p] == 0) ++p;
        if (p == nc) continue;
        const Rat pv = v[p];
        for (int j = 0; j < nc; ++j) v[j] /= pv;
        for (std::size_t b = 0; b < reduced.size(); ++b) {
            if (reduced[b][p] == 0) continue;
            const Rat f = reduced[b][p];
            for (int j = 0; j < nc; ++j) reduced[b][j] -= f * v[j];
        }
        reduced.push_back(std::move(v));
        pivot_of.push_back(p);
        idx.push_back(i);
        if (static_cast<int>(idx.size()) == dim) return idx;
    }
    return {};
}

// Columns of B^{-1} as primitive integer rays (B square, invertible).
std::vector<VecZ> inverse_columns(const std::vector<VecZ>& B) {
    const int d = static_cast<int>(B.size());
    std::vector<VecQ> m(d, VecQ(2 * d, Rat(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m[i][j] = Rat(B[i][j]);
        m[i][d + i] = 1;
    }
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int i = c; i < d; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw unsupported_error("dd: singular initial basis");
        std::swap(m[c], m[piv]);
        const Rat pv = m[c][c];
        for (int j = 0; j < 2 * d; ++j) m[c][j] /= pv;
        for (int i = 0; i < d; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (int j = 0; j < 2 * d; ++j) m[i][j] -= f * m[c][j];
        }
    }
    std::vector<VecZ> cols;
    cols.reserve(d);
    for (int j = 0; j < d; ++j) {
        VecQ col(d);
        for (int i = 0; i < d; ++i) col[i] = m[i][d + j];
        cols.push_back(integer_primitive(col));
    }
    return cols;
}

}  // namespace

std::vector<VecZ> dd_extremal_rays(std::vector<VecZ> ineqs, int dim) {
    if (dim <= 0) throw input_error("dd: ambient dimension must be positive");
    for (auto& h : ineqs) h = primitive(std::move(h));
    std::sort(ineqs.begin(), ineqs.end(), lex_less);
    ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
    // drop the zero inequality if present
    ineqs.erase(std::remove_if(ineqs.begin(), ineqs.end(),
                               [](const VecZ& h) {
                                   return std::all_of(h.begin(), h.end(),
                                                      [](const Int& x) { return x == 0; });
                               }),
                ineqs.end());

    const std::vector<int> base = independent_rows(ineqs, dim);
    if (static_cast<int>(base.size()) < dim)
        throw unsupported_error("dd: inequality system has rank < dim (cone contains a line)");

    // processing order: basis rows first, the rest in sorted order
    std::vector<int> order = base;
    {
        std::vector<char> used(ineqs.size(), 0);
        for (int i : base) used[i] = 1;
        for (int i = 0; i < static_cast<int>(ineqs.size()); ++i)
            if (!used[i]) order.push_back(i);
    }

    std::vector<VecZ> B;
    B.reserve(dim);
    for (int i = 0; i < dim; ++i) B.push_back(ineqs[base[i]]);
    std::vector<VecZ> rays = inverse_columns(B);

    const std::size_t total = ineqs.size();
    std::vector<Bits> tight;
    tight.reserve(rays.size());
    for (const auto& r : rays) {
        Bits t(total);
        for (int k = 0; k < dim; ++k)
            if (dot(ineqs[order[k]], r) == 0) t.set(k);
        tight.push_back(std::move(t));
    }

    for (std::size_t k = dim; k < total; ++k) {
        const VecZ& h = ineqs[order[k]];
        std::vector<Int> val(rays.size());
        std::vector<int> pos, zero, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(h, rays[i]);
            const int s = sgn(val[i]);
            if (s > 0)
                pos.push_back(static_cast<int>(i));
            else if (s < 0)
                neg.push_back(static_cast<int>(i));
            else
                zero.push_back(static_cast<int>(i));
        }
        if (neg.empty()) {
            for (int i : zero) tight[i].set(k);
            continue;
        }
        // combinations of adjacent (positive, negative) pairs land on h = 0
        std::vector<VecZ> combo_rays;
        std::vector<Bits> combo_tight;
        for (int ip : pos)
            for (int im : neg) {
                const Bits common = Bits::intersect(tight[ip], tight[im]);
                // rank prefilter, then the standard combinatorial test
                if (common.count() < dim - 2) continue;
                bool adjacent = true;
                for (std::size_t iw = 0; iw < rays.size(); ++iw) {
                    if (static_cast<int>(iw) == ip || static_cast<int>(iw) == im) continue;
                    if (tight[iw].superset_of(common)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                VecZ comb(rays[ip].size());
                for (std::size_t j = 0; j < comb.size(); ++j)
                    comb[j] = val[ip] * rays[im][j] - val[im] * rays[ip][j];
                comb = primitive(std::move(comb));
                Bits t(total);
                for (std::size_t kk = 0; kk <= k; ++kk)
                    if (dot(ineqs[order[kk]], comb) == 0) t.set(kk);
                combo_rays.push_back(std::move(comb));
                combo_tight.push_back(std::move(t));
            }
        std::vector<VecZ> nrays;
        std::vector<Bits> ntight;
        for (int i : pos) {
            nrays.push_back(std::move(rays[i]));
            ntight.push_back(std::move(tight[i]));
        }
        for (int i : zero) {
            tight[i].set(k);
            nrays.push_back(std::move(rays[i]));
            ntight.push_back(std::move(tight[i]));
        }
        for (std::size_t i = 0; i < combo_rays.size(); ++i) {
            nrays.push_back(std::move(combo_rays[i]));
            ntight.push_back(std::move(combo_tight[i]));
        }
        rays = std::move(nrays);
        tight = std::move(ntight);
    }

    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

}  // namespace detail

namespace {

// Project onto the pivot coordinates of the span's RREF basis: for g in the
// span, g = sum_i g[p_i] * row_i, so pivot coordinates are exact coordinates.
VecZ pivot_coords(const VecZ& g, const std::vector<int>& pivots) {
    VecZ c(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) c[i] = g[pivots[i]];
    return c;
}

// A functional f on span coordinates lifts to the ambient functional that
// scatters f into the pivot positions.
VecZ lift_functional(const VecZ& f, const std::vector<int>& pivots, int dim) {
    VecZ h(dim, Int(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) h[pivots[i]] = f[i];
    return h;
}

int rank_z(const std::vector<VecZ>& rows) {
    std::vector<VecQ> m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(to_rational(r));
    return detail::rref(m, nullptr);
}

std::vector<VecZ> identity_rows(int dim) {
    std::vector<VecZ> out(dim, VecZ(dim, Int(0)));
    for (int i = 0; i < dim; ++i) out[i][i] = 1;
    return out;
}

}  // namespace

RationalCone RationalCone::from_generators_z(int ambient_dim, const std::vector<VecZ>& gens) {
    if (ambient_dim <= 0) throw input_error("from_generators: ambient dimension must be positive");
    RationalCone c;
    c.ambient_dim_ = ambient_dim;

    std::vector<VecZ> g;
    for (const auto& v : gens) {
        if (static_cast<int>(v.size()) != ambient_dim)
            throw input_error("from_generators: generator length != ambient dimension");
        VecZ p = primitive(v);
        if (std::all_of(p.begin(), p.end(), [](const Int& x) { return x == 0; })) continue;
        g.push_back(std::move(p));
    }
    std::sort(g.begin(), g.end(), lex_less);
    g.erase(std::unique(g.begin(), g.end()), g.end());

    if (g.empty()) {  // the zero cone
        c.dim_ = 0;
        c.pointed_ = true;
        c.equations_ = identity_rows(ambient_dim);
        return c;
    }

    // span basis in RREF; pivot coordinates parameterize the span
    std::vector<VecQ> span;
    span.reserve(g.size());
    for (const auto& v : g) span.push_back(to_rational(v));
    std::vector<int> pivots;
    const int k = detail::rref(span, &pivots);
    c.dim_ = k;
    c.equations_ = detail::kernel_basis(g, ambient_dim);

    std::vector<VecZ> coords;
    coords.reserve(g.size());
    for (const auto& v : g) coords.push_back(pivot_coords(v, pivots));

    // facets of the coordinate cone = extremal rays of its dual; the dual
    // system has full rank k because the coordinate generators span R^k
    std::vector<VecZ> coord_facets = detail::dd_extremal_rays(coords, k);
    c.pointed_ = rank_z(coord_facets) == k;

    c.facets_.reserve(coord_facets.size());
    for (const auto& f : coord_facets)
        c.facets_.push_back(lift_functional(f, pivots, ambient_dim));
    std::sort(c.facets_.begin(), c.facets_.end(), lex_less);

    if (c.pointed_) {
        std::vector<VecZ> coord_rays = detail::dd_extremal_rays(coord_facets, k);
        c.rays_.reserve(coord_rays.size());
        for (const auto& cr : coord_rays) {
            VecQ x(ambient_dim, Rat(0));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < ambient_dim; ++j) x[j] += Rat(cr[i]) * span[i][j];
            c.rays_.push_back(integer_primitive(x));
        }
        std::sort(c.rays_.begin(), c.rays_.end(), lex_less);
    }
    return c;
}

RationalCone RationalCone::from_generators(int ambient_dim, const std::vector<VecQ>& gens) {
    std::vector<VecZ> g;
    g.reserve(gens.size());
    for (const auto& v : gens) {
        if (static_cast<int>(v.size()) != ambient_dim)
            throw input_error("from_generators: generator length != ambient dimension");
        g.push_back(integer_primitive(v));
    }
    return from_generators_z(ambient_dim, g);
}

RationalCone RationalCone::from_constraints(int ambient_dim, const std::vector<VecZ>& equations,
                                            const std::vector<VecZ>& inequalities) {
    if (ambient_dim <= 0) throw input_error("from_constraints: ambient dimension must be positive");
    for (const auto& v : equations)
        if (static_cast<int>(v.size()) != ambient_dim)
            throw input_error("from_constraints: equation length != ambient dimension");
    for (const auto& v : inequalities)
        if (static_cast<int>(v.size()) != ambient_dim)
            throw input_error("from_constraints: inequality length != ambient dimension");

    const std::vector<VecZ> K = detail::kernel_basis(equations, ambient_dim);
    const int m = static_cast<int>(K.size());
    if (m == 0) {
        RationalCone c;
        c.ambient_dim_ = ambient_dim;
        c.dim_ = 0;
        c.equations_ = identity_rows(ambient_dim);
        return c;
    }
    std::vector<VecZ> coord_ineqs;
    coord_ineqs.reserve(inequalities.size());
    for (const auto& h : inequalities) {
        VecZ ch(m);
        for (int j = 0; j < m; ++j) ch[j] = dot(h, K[j]);
        coord_ineqs.push_back(std::move(ch));
    }
    // dd_extremal_rays rejects rank-deficient systems, i.e. lineality
    std::vector<VecZ> coord_rays = detail::dd_extremal_rays(std::move(coord_ineqs), m);
    std::vector<VecZ> rays;
    rays.reserve(coord_rays.size());
    for (const auto& cr : coord_rays) {
        VecZ x(ambient_dim, Int(0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < ambient_dim; ++j) x[j] += cr[i] * K[i][j];
        rays.push_back(primitive(std::move(x)));
    }
    return from_generators_z(ambient_dim, rays);
}

const std::vector<VecZ>& RationalCone::extremal_rays() const {
    if (!pointed_) throw unsupported_error("extremal_rays: cone contains a line");
    return rays_;
}

const std::vector<VecZ>& RationalCone::facet_normals() const {
    if (!full_dimensional())
        throw unsupported_error("facet_normals: cone is not full-dimensional");
    if (!pointed_) throw unsupported_error("facet_normals: cone contains a line");
    return facets_;
}

bool RationalCone::contains(const VecQ& v, bool strict) const {
    if (static_cast<int>(v.size()) != ambient_dim_)
        throw dimension_error("contains: vector length != ambient dimension");
    for (const auto& e : equations_)
        if (dot_q(e, v) != 0) return false;
    for (const auto& f : facets_) {
        const Rat x = dot_q(f, v);
        if (strict ? x <= 0 : x < 0) return false;
    }
    return true;
}

bool RationalCone::contains(const VecZ& v, bool strict) const {
    return contains(to_rational(v), strict);
}

VecQ RationalCone::relative_interior_point() const {
    if (is_zero()) throw domain_error("relative_interior_point: zero cone");
    const auto& rays = extremal_rays();
    VecQ p(ambient_dim_, Rat(0));
    for (const auto& r : rays)
        for (int j = 0; j < ambient_dim_; ++j) p[j] += Rat(r[j]);
    return p;
}

RationalCone RationalCone::dual() const {
    if (!full_dimensional() || !pointed_)
        throw unsupported_error("dual: defined only for full-dimensional pointed cones in v1");
    // facets and rays trade places; both lists are already canonical
    RationalCone d;
    d.ambient_dim_ = ambient_dim_;
    d.dim_ = ambient_dim_;
    d.pointed_ = true;
    d.rays_ = facets_;
    d.facets_ = rays_;
    return d;
}

RationalCone RationalCone::intersect(const RationalCone& other) const {
    if (ambient_dim_ != other.ambient_dim_)
        throw dimension_error("intersect: ambient dimension mismatch");
    std::vector<VecZ> eqs = equations_;
    eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
    std::vector<VecZ> ineqs = facets_;
    ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
    return from_constraints(ambient_dim_, eqs, ineqs);
}

bool RationalCone::equals(const RationalCone& other) const {
    if (ambient_dim_ != other.ambient_dim_) return false;
    if (pointed_ && other.pointed_) return rays_ == other.rays_;
    return pointed_ == other.pointed_ && equations_ == other.equations_ &&
           facets_ == other.facets_;
}

}  // namespace coxfan
