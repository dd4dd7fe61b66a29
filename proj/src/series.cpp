#include "schurq/series.hpp"

#include <stdexcept>

#include "schurq/tableaux.hpp"

namespace schurq {

namespace {

// Expansion of 1/prod_k (u - roots[k]) as a plain series in 1/u.
USeries inverse_monic_product(const std::vector<Rational>& roots, int order,
                              std::size_t n_vars) {
    UPoly den{MultiPoly::constant(n_vars, Rational(1))};
    for (const Rational& r : roots) {
        UPoly next(den.size() + 1, MultiPoly(n_vars));
        for (std::size_t k = 0; k < den.size(); ++k) {
            next[k + 1] += den[k];
            next[k] -= den[k] * r;
        }
        den = std::move(next);
    }
    UPoly num{MultiPoly::constant(n_vars, Rational(1))};
    RatioExpansion ratio = useries_of_ratio(num, den, order);
    return ratio.series.shifted_down(-ratio.shift);
}

std::vector<Rational> tau_roots(const ParameterSequence& a, int count) {
    // (u | ta)^count has roots a_2 .. a_{count+1}.
    std::vector<Rational> roots;
    roots.reserve(static_cast<std::size_t>(count));
    for (int j = 2; j <= count + 1; ++j) roots.push_back(a.at(j));
    return roots;
}

std::vector<Rational> plain_roots(const ParameterSequence& a, int count) {
    // (u | a)^count has roots a_1 .. a_count.
    std::vector<Rational> roots;
    roots.reserve(static_cast<std::size_t>(count));
    for (int j = 1; j <= count; ++j) roots.push_back(a.at(j));
    return roots;
}

std::vector<Rational> homogeneous_values(const std::vector<Rational>& xs, int max_k) {
    std::vector<Rational> h(static_cast<std::size_t>(max_k) + 1, Rational(0));
    h[0] = 1;
    for (const Rational& x : xs)
        for (int k = 1; k <= max_k; ++k)
            h[static_cast<std::size_t>(k)] += x * h[static_cast<std::size_t>(k - 1)];
    return h;
}

std::vector<Rational> elementary_values(const std::vector<Rational>& xs, int max_k) {
    std::vector<Rational> e(static_cast<std::size_t>(max_k) + 1, Rational(0));
    e[0] = 1;
    for (const Rational& x : xs)
        for (int k = max_k; k >= 1; --k)
            e[static_cast<std::size_t>(k)] += x * e[static_cast<std::size_t>(k - 1)];
    return e;
}

}  // namespace

DCoeffTable d_coeffs(const ParameterSequence& a, const ParameterSequence& b, int max_r) {
    a.require(max_r + 1, "d_coeffs");
    b.require(max_r + 1, "d_coeffs");
    const int order = max_r + 1;
    std::vector<USeries> basis;  // basis[r] = expansion of 1/prod_{k<=r+1}(u-a_k)
    basis.reserve(static_cast<std::size_t>(max_r) + 1);
    for (int r = 0; r <= max_r; ++r)
        basis.push_back(inverse_monic_product(plain_roots(a, r + 1), order, 0));

    DCoeffTable table{max_r, RationalMatrix(static_cast<std::size_t>(max_r) + 1,
                                            std::vector<Rational>(static_cast<std::size_t>(max_r) + 1,
                                                                  Rational(0)))};
    for (int rp = 0; rp <= max_r; ++rp) {
        USeries residual = inverse_monic_product(plain_roots(b, rp + 1), order, 0);
        for (int r = rp; r <= max_r; ++r) {
            Rational d = residual.coeff(r + 1).constant_term();
            table.d[static_cast<std::size_t>(r)][static_cast<std::size_t>(rp)] = d;
            if (d != 0) residual = residual - basis[static_cast<std::size_t>(r)] * d;
        }
    }
    return table;
}

Rational d_coeff_super_h(const ParameterSequence& a, const ParameterSequence& b, int r,
                         int r_prime) {
    if (r < r_prime) return Rational(0);
    b.require(r_prime + 1, "d_coeff_super_h");
    a.require(std::max(1, r), "d_coeff_super_h");
    std::vector<Rational> xs;
    for (int j = 2; j <= r_prime + 1; ++j) xs.push_back(b.at(j));
    std::vector<Rational> ys;
    for (int j = 2; j <= r; ++j) ys.push_back(-a.at(j));
    const int k = r - r_prime;
    auto h = homogeneous_values(xs, k);
    auto e = elementary_values(ys, k);
    Rational out(0);
    for (int i = 0; i <= k; ++i)
        out += h[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(k - i)];
    return out;
}

MultiPoly p_two_row_normalized(int r, int s, const ParameterSequence& a, int n) {
    if (r < 0 || s < 0) throw std::invalid_argument("two-row indices must be non-negative");
    if (r == s) return MultiPoly::zero(static_cast<std::size_t>(n));
    if (r < s) return -p_two_row_normalized(s, r, a, n);
    std::vector<int> parts{r};
    if (s > 0) parts.push_back(s);
    return p_multiparam(StrictPartition(std::move(parts)), a, n);
}

bool transition_two_row_check(int r, int s, const ParameterSequence& a,
                              const ParameterSequence& b, int n) {
    if (r <= s || s < 1) throw std::invalid_argument("two-row check needs r > s >= 1");
    DCoeffTable table = d_coeffs(a, b, r);
    MultiPoly lhs = p_two_row_normalized(r, s, a, n);
    MultiPoly rhs(static_cast<std::size_t>(n));
    for (int rp = 1; rp <= r; ++rp) {
        if (table.at(r, rp) == 0) continue;
        for (int sp = 1; sp <= s; ++sp) {
            Rational c = table.at(r, rp) * table.at(s, sp);
            if (c == 0) continue;
            rhs += p_two_row_normalized(rp, sp, b, n) * c;
        }
    }
    return lhs == rhs;
}

TransitionMatrix transition_matrix(const ParameterSequence& a, const ParameterSequence& b,
                                   int max_weight) {
    TransitionMatrix out;
    out.shapes = strict_partitions_upto(max_weight);
    DCoeffTable table = d_coeffs(a, b, max_weight);
    const std::size_t count = out.shapes.size();
    out.entries.assign(count, std::vector<Rational>(count, Rational(0)));
    for (std::size_t mi = 0; mi < count; ++mi) {
        const auto& mu = out.shapes[mi];
        const int l = mu.length();
        for (std::size_t ni = 0; ni < count; ++ni) {
            const auto& nu = out.shapes[ni];
            if (nu.length() != l) continue;
            RationalMatrix minor(static_cast<std::size_t>(l),
                                 std::vector<Rational>(static_cast<std::size_t>(l)));
            for (int i = 1; i <= l; ++i)
                for (int j = 1; j <= l; ++j)
                    minor[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                        table.at(mu.part(i), nu.part(j));
            out.entries[mi][ni] = determinant(std::move(minor));
        }
    }
    return out;
}

bool one_row_genfun_check(const ParameterSequence& a, int n, int order) {
    a.require(order + 1, "one-row generating function");
    const auto n_vars = static_cast<std::size_t>(n);
    USeries lhs(n_vars, order);
    for (int r = 0; r <= order; ++r) {
        MultiPoly q = q_multiparam(r == 0 ? StrictPartition() : StrictPartition({r}),
                                   a, n);
        lhs = lhs + inverse_monic_product(tau_roots(a, r), order, n_vars) * q;
    }
    USeries rhs = USeries::one(n_vars, order);
    for (int j = 0; j < n; ++j) {
        MultiPoly x = MultiPoly::variable(n_vars, static_cast<std::size_t>(j));
        UPoly num{x, MultiPoly::constant(n_vars, Rational(1))};
        UPoly den{-x, MultiPoly::constant(n_vars, Rational(1))};
        RatioExpansion factor = useries_of_ratio(num, den, order);
        rhs = rhs * factor.series;  // shift is 0 for equal degrees
    }
    return lhs == rhs;
}

bool two_row_relations_check(int k, int l, const ParameterSequence& a, int n) {
    auto p_one = [&](int r) {
        return r == 0 ? MultiPoly::constant(static_cast<std::size_t>(n), Rational(1))
                      : p_multiparam(StrictPartition({r}), a, n);
    };
    bool ok = true;
    if (k >= 1 && l >= 1) {
        a.require(std::max(k, l) + 1, "two-row relation");
        MultiPoly lhs = p_two_row_normalized(k + 1, l, a, n) +
                        p_two_row_normalized(k, l + 1, a, n) +
                        p_two_row_normalized(k, l, a, n) * (a.at(k + 1) + a.at(l + 1));
        MultiPoly rhs = p_one(k) * p_one(l + 1) - p_one(k + 1) * p_one(l) +
                        p_one(k) * p_one(l) * (a.at(l + 1) - a.at(k + 1));
        ok = ok && lhs == rhs;
    }
    if (k >= 1) {
        a.require(k + 1, "two-row relation");
        MultiPoly lhs = p_one(k + 1) + p_two_row_normalized(k, 1, a, n) +
                        p_one(k) * a.at(k + 1);
        ok = ok && lhs == p_one(k) * p_one(1);
    }
    return ok;
}

namespace {

// Doubly truncated Laurent window in u and v: coefficient grid for exponents
// min_e .. max_e in each variable. Terms drifting above max_e must stay zero;
// terms below min_e are dropped.
struct BiWindow {
    int min_e;
    int max_e;
    std::size_t n_vars;
    std::vector<std::vector<MultiPoly>> c;

    BiWindow(int min_e_, int max_e_, std::size_t n_vars_)
        : min_e(min_e_), max_e(max_e_), n_vars(n_vars_),
          c(static_cast<std::size_t>(max_e_ - min_e_ + 1),
            std::vector<MultiPoly>(static_cast<std::size_t>(max_e_ - min_e_ + 1),
                                   MultiPoly(n_vars_))) {}

    std::size_t idx(int e) const { return static_cast<std::size_t>(e - min_e); }
    bool in_range(int e) const { return e >= min_e && e <= max_e; }

    void add(int eu, int ev, const MultiPoly& p) {
        if (p.is_zero()) return;
        if (eu > max_e || ev > max_e)
            throw std::logic_error("bivariate window overflow above max exponent");
        if (!in_range(eu) || !in_range(ev)) return;
        c[idx(eu)][idx(ev)] += p;
    }

    BiWindow& accumulate(const BiWindow& o) {
        for (int eu = min_e; eu <= max_e; ++eu)
            for (int ev = min_e; ev <= max_e; ++ev)
                c[idx(eu)][idx(ev)] += o.c[idx(eu)][idx(ev)];
        return *this;
    }

    // Multiplies by scale * u^du * v^dv.
    BiWindow shifted(int du, int dv, const Rational& scale) const {
        BiWindow out(min_e, max_e, n_vars);
        for (int eu = min_e; eu <= max_e; ++eu)
            for (int ev = min_e; ev <= max_e; ++ev) {
                const MultiPoly& p = c[idx(eu)][idx(ev)];
                if (p.is_zero()) continue;
                out.add(eu + du, ev + dv, p * scale);
            }
        return out;
    }

    // Outer product of a pure-u series and a pure-v series.
    static BiWindow outer(const USeries& su, const USeries& sv, int min_e, int max_e) {
        BiWindow out(min_e, max_e, su.n_vars());
        for (int i = 0; i <= su.order(); ++i) {
            if (su.coeff(i).is_zero()) continue;
            for (int j = 0; j <= sv.order(); ++j) {
                if (sv.coeff(j).is_zero()) continue;
                out.add(-i, -j, su.coeff(i) * sv.coeff(j));
            }
        }
        return out;
    }
};

}  // namespace

bool two_row_genfun_direct_check(const ParameterSequence& a, int n, int biorder) {
    const int inner_order = biorder + 2;  // accuracy reserve for the uv(u+v) factor
    const int max_index = biorder + 1;    // deeper terms fall below the window
    a.require(max_index + 2, "two-row generating function");
    const auto n_vars = static_cast<std::size_t>(n);
    const int min_e = -inner_order - 1, max_e = 3;

    std::vector<USeries> inv_u;  // inv_u[k] = expansion of 1/(u|a)^{k+1}
    for (int k = 0; k <= max_index; ++k)
        inv_u.push_back(inverse_monic_product(plain_roots(a, k + 1), inner_order, n_vars));

    BiWindow sum(min_e, max_e, n_vars);
    for (int k = 0; k <= max_index; ++k)
        for (int l = 0; l <= max_index; ++l) {
            if (k == l) continue;
            MultiPoly p = p_two_row_normalized(k, l, a, n);
            if (p.is_zero()) continue;
            BiWindow term = BiWindow::outer(inv_u[static_cast<std::size_t>(k)],
                                            inv_u[static_cast<std::size_t>(l)], min_e, max_e);
            for (int eu = min_e; eu <= max_e; ++eu)
                for (int ev = min_e; ev <= max_e; ++ev) {
                    MultiPoly& cell = term.c[term.idx(eu)][term.idx(ev)];
                    if (!cell.is_zero()) cell = cell * p;
                }
            sum.accumulate(term);
        }
    // 4uv(u+v) = 4u^2 v + 4uv^2
    BiWindow lhs = sum.shifted(2, 1, Rational(4));
    lhs.accumulate(sum.shifted(1, 2, Rational(4)));

    USeries f(n_vars, inner_order);
    {
        f = USeries::one(n_vars, inner_order);
        for (int j = 0; j < n; ++j) {
            MultiPoly x = MultiPoly::variable(n_vars, static_cast<std::size_t>(j));
            UPoly num{x, MultiPoly::constant(n_vars, Rational(1))};
            UPoly den{-x, MultiPoly::constant(n_vars, Rational(1))};
            f = f * useries_of_ratio(num, den, inner_order).series;
        }
    }
    const USeries one = USeries::one(n_vars, inner_order);
    BiWindow rhs(min_e, max_e, n_vars);
    // u (F_u + 1)(1 - F_v) - v (1 - F_u)(F_v + 1)
    rhs.accumulate(BiWindow::outer(f + one, one - f, min_e, max_e).shifted(1, 0, Rational(1)));
    rhs.accumulate(BiWindow::outer(one - f, f + one, min_e, max_e).shifted(0, 1, Rational(-1)));

    for (int eu = -biorder; eu <= 2; ++eu)
        for (int ev = -biorder; ev <= 2; ++ev)
            if (!(lhs.c[lhs.idx(eu)][lhs.idx(ev)] == rhs.c[rhs.idx(eu)][rhs.idx(ev)]))
                return false;
    return true;
}

}  // namespace schurq
