#ifndef ASEP_USW_HPP
#define ASEP_USW_HPP

#include <asep/band.hpp>
#include <asep/matrix.hpp>
#include <asep/params.hpp>
#include <asep/polynomial.hpp>

#include <memory>
#include <string>
#include <vector>

namespace asep {

/*
 * Row entries of the tridiagonal matrices d and e: d has (d_flat, d_nat,
 * d_sharp) on the (sub, main, super) diagonals at row n, likewise e.  a_cal
 * is the shared normalization A_n of the sub-diagonal entries.
 */
template <Field F>
struct UswEntries {
    F d_nat, d_sharp, d_flat;
    F e_nat, e_sharp, e_flat;
    F a_cal;
};

namespace detail {

// A_n as printed; at n = 0 the (1 - q^{n-1}abcd) factor cancels between
// numerator and denominator, leaving a form with no negative q-powers.
template <Field F>
F usw_a_cal(const ParamPoint<F>& p, int n) {
    const F one(1);
    const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
    F abcd = a * b * c * d;
    F pairs = (one - a * b) * (one - a * c) * (one - a * d) * (one - b * c) * (one - b * d) *
              (one - c * d);
    if (n == 0) {
        F den = (one - abcd) * (one - abcd) * (one - q * abcd);
        if (den.is_zero()) throw DegenerateParameterError("(1-abcd)^2(1-q·abcd)");
        return (one - q) * pairs * den.inverse();
    }
    F qn = ring_pow(q, n);
    F num = (one - ring_pow(q, n - 1) * abcd) * (one - ring_pow(q, n + 1)) *
            (one - qn * a * b) * (one - qn * a * c) * (one - qn * a * d) * (one - qn * b * c) *
            (one - qn * b * d) * (one - qn * c * d);
    F den = (one - ring_pow(q, 2 * n - 1) * abcd) * (one - ring_pow(q, 2 * n) * abcd) *
            (one - ring_pow(q, 2 * n) * abcd) * (one - ring_pow(q, 2 * n + 1) * abcd);
    if (den.is_zero()) throw DegenerateParameterError("A_n denominator at n=" + std::to_string(n));
    return num * den.inverse();
}

} // namespace detail

/*
 * The seven scalars of row n.  The diagonal entries carry a global q^{n-1}
 * in print; at n = 0 every q^{-1} term is killed by an explicit q factor
 * inside the bracket, and the cancelled forms below are the canonical
 * implementation (valid at q = 0).  usw_entries_unreduced evaluates the
 * printed expression verbatim and is the q != 0 oracle for the n = 0 case.
 */
template <Field F>
UswEntries<F> usw_entries(const ParamPoint<F>& p, int n) {
    p.require_horizon(n);
    const F one(1);
    const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
    F abcd = a * b * c * d;
    UswEntries<F> e;
    if (n == 0) {
        F den = one - abcd;
        e.d_nat = (b + d - b * d * (a + c)) * den.inverse();
        e.e_nat = (a + c - a * c * (b + d)) * den.inverse();
    } else {
        F qn1 = ring_pow(q, n - 1), qn = qn1 * q;
        F den = (one - qn1 * qn1 * abcd) * (one - qn * qn * abcd);
        if (den.is_zero()) throw DegenerateParameterError("(1-q^{2n-2}abcd)(1-q^{2n}abcd)");
        F pref = qn1 * den.inverse();
        e.d_nat = pref * (b * d * (a + c) + (b + d) * q - abcd * (b + d) * qn1 -
                          (b * d * (a + c) + abcd * (b + d)) * qn - b * d * (a + c) * qn * q +
                          a * b * b * c * d * d * (a + c) * qn1 * qn +
                          abcd * (b + d) * qn * qn);
        e.e_nat = pref * (a * c * (b + d) + (a + c) * q - abcd * (a + c) * qn1 -
                          (a * c * (b + d) + abcd * (a + c)) * qn - a * c * (b + d) * qn * q +
                          a * a * b * c * c * d * (b + d) * qn1 * qn +
                          abcd * (a + c) * qn * qn);
    }
    F qn = ring_pow(q, n);
    e.a_cal = detail::usw_a_cal(p, n);
    F sub_den = (one - qn * a * c) * (one - qn * b * d);
    if (sub_den.is_zero()) throw DegenerateParameterError("(1-q^n·ac)(1-q^n·bd)");
    e.d_sharp = one;
    e.e_sharp = -(qn * a * c);
    e.d_flat = -(qn * b * d) * sub_den.inverse() * e.a_cal;
    e.e_flat = sub_den.inverse() * e.a_cal;
    return e;
}

// Printed formulas evaluated verbatim, q^{n-1} included; requires q != 0
// when n = 0.  Test oracle only.
template <Field F>
UswEntries<F> usw_entries_unreduced(const ParamPoint<F>& p, int n) {
    if (n > 0) return usw_entries(p, n);
    if (p.q.is_zero())
        throw std::domain_error("usw_entries_unreduced: q = 0 needs the cancelled n=0 forms");
    const F one(1);
    const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
    F abcd = a * b * c * d;
    F qinv = p.q.inverse();
    F den = (one - qinv * qinv * abcd) * (one - abcd);
    F pref = qinv * den.inverse();
    UswEntries<F> e = usw_entries(p, 0);
    e.d_nat = pref * (b * d * (a + c) + (b + d) * q - abcd * (b + d) * qinv -
                      (b * d * (a + c) + abcd * (b + d)) - b * d * (a + c) * q +
                      a * b * b * c * d * d * (a + c) * qinv + abcd * (b + d));
    e.e_nat = pref * (a * c * (b + d) + (a + c) * q - abcd * (a + c) * qinv -
                      (a * c * (b + d) + abcd * (a + c)) - a * c * (b + d) * q +
                      a * a * b * c * c * d * (b + d) * qinv + abcd * (a + c));
    F num = (one - qinv * abcd) * (one - q) * (one - a * b) * (one - a * c) * (one - a * d) *
            (one - b * c) * (one - b * d) * (one - c * d);
    F aden = (one - qinv * abcd) * (one - abcd) * (one - abcd) * (one - q * abcd);
    e.a_cal = num * aden.inverse();
    F sub_den = (one - a * c) * (one - b * d);
    e.d_flat = -(b * d) * sub_den.inverse() * e.a_cal;
    e.e_flat = sub_den.inverse() * e.a_cal;
    return e;
}

/*
 * The representation operators.  d and e are the tridiagonal band matrices;
 * D = (1 + d)/(1-q), E = (1 + e)/(1-q), and A = DE - ED (band (2,2),
 * materialized entrywise from the product difference).
 */
template <Field F>
struct UswOperators {
    BandOperator<F> d, e, D, E, A;
};

template <Field F>
UswOperators<F> build_operators(const ParamPoint<F>& p) {
    // Rows are precomputed to the certified horizon so no generator call can
    // hit an unvalidated denominator.
    auto table = std::make_shared<std::vector<UswEntries<F>>>();
    table->reserve(p.horizon + 1);
    for (int n = 0; n <= p.horizon; ++n) table->push_back(usw_entries(p, n));
    auto row = [table, p](int n) -> const UswEntries<F>& {
        p.require_horizon(n);
        return (*table)[n];
    };

    UswOperators<F> ops;
    F zero(0), one(1);
    ops.d = band_from_diagonals<F>([row](int n) { return row(n).d_flat; },
                                   [row](int n) { return row(n).d_nat; },
                                   [row](int n) { return row(n).d_sharp; }, zero);
    ops.e = band_from_diagonals<F>([row](int n) { return row(n).e_flat; },
                                   [row](int n) { return row(n).e_nat; },
                                   [row](int n) { return row(n).e_sharp; }, zero);
    F inv1q = (one - p.q).inverse();
    auto lift = [inv1q, one](const BandOperator<F>& m) {
        auto gen = [inv1q, one, m](int i, int j) {
            F v = m.entry(i, j);
            if (i == j) v = v + one;
            return inv1q * v;
        };
        return BandOperator<F>(1, 1, gen, m.zero());
    };
    ops.D = lift(ops.d);
    ops.E = lift(ops.e);
    ops.A = band_commutator(ops.D, ops.E);
    return ops;
}

// xi·D + E as a band operator over Poly<F>, the fugacity-weighted hop matrix.
template <Field F>
BandOperator<Poly<F>> fugacity_operator(const UswOperators<F>& ops) {
    BandOperator<F> D = ops.D, E = ops.E;
    auto gen = [D, E](int i, int j) {
        return Poly<F>(std::vector<F>{E.entry(i, j), D.entry(i, j)});
    };
    return BandOperator<Poly<F>>(1, 1, gen, Poly<F>());
}

/*
 * Relation checker.  Product relations are verified entrywise on the
 * top-left interior block, computed on truncations padded past the combined
 * bandwidth so truncation effects cannot reach the compared block; boundary
 * relations are verified on full rows/columns.
 */
struct RelationFailure {
    std::string relation;
    int i, j;
    std::string lhs, rhs;
};

struct RelationReport {
    std::vector<RelationFailure> failures;
    std::vector<std::string> checked;
    bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const GaussianRational& x) { return x.str(); }

template <Field F>
void compare_interior(RelationReport& report, const std::string& name, const DenseMatrix<F>& lhs,
                      const DenseMatrix<F>& rhs, int dim) {
    report.checked.push_back(name);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (!(lhs(i, j) == rhs(i, j)))
                report.failures.push_back({name, i, j, scalar_str(lhs(i, j)), scalar_str(rhs(i, j))});
}

} // namespace detail

template <Field F>
RelationReport check_ansatz_relations(const ParamPoint<F>& p, const UswOperators<F>& ops, int dim) {
    if (dim < 6) throw std::invalid_argument("check_ansatz_relations: dim must be >= 6");
    RelationReport report;
    const F one(1), zero(0);

    // Widest product below is d^4·e: five tridiagonal factors.
    const int pad = dim + 12;
    DenseMatrix<F> d = ops.d.truncation(pad), e = ops.e.truncation(pad);
    DenseMatrix<F> D = ops.D.truncation(pad), E = ops.E.truncation(pad);
    DenseMatrix<F> A = ops.A.truncation(pad);
    DenseMatrix<F> I = identity_matrix<F>(pad);

    auto cut = [dim](const DenseMatrix<F>& m) {
        DenseMatrix<F> out(dim, dim, m(0, 0));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) out(i, j) = m(i, j);
        return out;
    };
    auto scale = [pad](const F& c, const DenseMatrix<F>& m) {
        DenseMatrix<F> out = m;
        for (int i = 0; i < pad; ++i)
            for (int j = 0; j < pad; ++j) out(i, j) = c * m(i, j);
        return out;
    };

    detail::compare_interior(report, "DE-qED = D+E",
                             cut(mat_sub(mat_mul(D, E), scale(p.q, mat_mul(E, D)))),
                             cut(mat_add(D, E)), dim);
    detail::compare_interior(report, "DA = qAD+A",
                             cut(mat_mul(D, A)),
                             cut(mat_add(scale(p.q, mat_mul(A, D)), A)), dim);
    detail::compare_interior(report, "AE = qEA+A",
                             cut(mat_mul(A, E)),
                             cut(mat_add(scale(p.q, mat_mul(E, A)), A)), dim);
    detail::compare_interior(report, "dA = qAd", cut(mat_mul(d, A)),
                             cut(scale(p.q, mat_mul(A, d))), dim);
    detail::compare_interior(report, "Ae = qeA", cut(mat_mul(A, e)),
                             cut(scale(p.q, mat_mul(e, A))), dim);
    detail::compare_interior(report, "de = qed+(1-q)I", cut(mat_mul(d, e)),
                             cut(mat_add(scale(p.q, mat_mul(e, d)), scale(one - p.q, I))), dim);
    DenseMatrix<F> dk = I;
    for (int k = 1; k <= 4; ++k) {
        DenseMatrix<F> dk1 = dk;  // d^{k-1}
        dk = mat_mul(dk, d);
        F qk = ring_pow(p.q, k);
        detail::compare_interior(report, "d^" + std::to_string(k) + "e = q^k e d^k + (1-q^k) d^{k-1}",
                                 cut(mat_mul(dk, e)),
                                 cut(mat_add(scale(qk, mat_mul(e, dk)), scale(one - qk, dk1))),
                                 dim);
    }

    // Boundary rows/columns: single factors have exact truncations.
    auto report_row = [&](const std::string& name, int j, const F& lhs, const F& rhs) {
        if (!(lhs == rhs))
            report.failures.push_back({name, 0, j, detail::scalar_str(lhs), detail::scalar_str(rhs)});
    };
    report.checked.push_back("<W|(aE-gD) = <W|");
    for (int j = 0; j < dim; ++j)
        report_row("<W|(aE-gD) = <W|", j, p.alpha * E(0, j) - p.gamma * D(0, j),
                   j == 0 ? one : zero);
    report.checked.push_back("(bD-dE)|V> = |V>");
    for (int i = 0; i < dim; ++i)
        report_row("(bD-dE)|V> = |V>", i, p.beta * D(i, 0) - p.delta * E(i, 0),
                   i == 0 ? one : zero);
    report.checked.push_back("d|V> = (b+d)|V> - bd·e|V>");
    for (int i = 0; i < dim; ++i)
        report_row("d|V> = (b+d)|V> - bd·e|V>", i, d(i, 0),
                   (i == 0 ? p.b + p.d : zero) - p.b * p.d * e(i, 0));
    report.checked.push_back("<W|e = (a+c)<W| - ac·<W|d");
    for (int j = 0; j < dim; ++j)
        report_row("<W|e = (a+c)<W| - ac·<W|d", j, e(0, j),
                   (j == 0 ? p.a + p.c : zero) - p.a * p.c * d(0, j));
    // d|V^k> three-term column relation.
    report.checked.push_back("d|V^k> three-term");
    for (int k = 1; k + 1 < dim; ++k) {
        UswEntries<F> below = usw_entries(p, k - 1), here = usw_entries(p, k);
        for (int i = 0; i < dim; ++i) {
            F rhs = zero;
            if (i == k - 1) rhs = rhs + below.d_sharp;
            if (i == k) rhs = rhs + here.d_nat;
            if (i == k + 1) rhs = rhs + here.d_flat;
            if (!(d(i, k) == rhs))
                report.failures.push_back({"d|V^k> three-term", i, k, detail::scalar_str(d(i, k)),
                                           detail::scalar_str(rhs)});
        }
    }
    return report;
}

template <Field F>
RelationReport check_ansatz_relations(const ParamPoint<F>& p, int dim) {
    return check_ansatz_relations(p, build_operators(p), dim);
}

} // namespace asep

#endif // ASEP_USW_HPP
