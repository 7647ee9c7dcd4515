// Structure-constant presentations of algebras, coalgebras, bialgebras and
// Hopf algebras, with exact axiom validators, duals, convolution, and the
// regular actions of the dual algebra.
//
// A multiplication is one matrix dim x dim^2 (column (i,j) is e_i * e_j),
// a comultiplication one matrix dim^2 x dim, a counit a 1 x dim row.
// Validators quantify over all basis tuples and report the violated law
// together with the first offending tuple.

#pragma once

#include "report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace doihopf {

template <Field F>
struct StructAlgebra {
    F field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    Matrix<F> mult;  // dim x dim^2
    Matrix<F> unit;  // dim x 1

    StructAlgebra(const F& f, std::size_t d, std::vector<std::string> lab)
        : field(f), dim(d), labels(std::move(lab)), mult(f, d, d * d), unit(f, d, 1) {}

    /// Product of two coordinate vectors via the structure constants.
    Matrix<F> mul_vec(const Matrix<F>& u, const Matrix<F>& v) const {
        Matrix<F> w(field, dim, 1);
        for (std::size_t i = 0; i < dim; ++i) {
            if (field.is_zero(u[i])) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (field.is_zero(v[j])) continue;
                const auto coeff = field.mul(u[i], v[j]);
                for (std::size_t m = 0; m < dim; ++m)
                    w[m] = field.add(w[m], field.mul(coeff, mult.at(m, i * dim + j)));
            }
        }
        return w;
    }

    /// Matrix of x |-> v * x.
    Matrix<F> left_mult_operator(const Matrix<F>& v) const {
        Matrix<F> op(field, dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            const auto col = mul_vec(v, Matrix<F>::basis_vector(field, dim, j));
            for (std::size_t i = 0; i < dim; ++i) op.at(i, j) = col[i];
        }
        return op;
    }

    /// Matrix of x |-> x * v.
    Matrix<F> right_mult_operator(const Matrix<F>& v) const {
        Matrix<F> op(field, dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            const auto col = mul_vec(Matrix<F>::basis_vector(field, dim, j), v);
            for (std::size_t i = 0; i < dim; ++i) op.at(i, j) = col[i];
        }
        return op;
    }
};

template <Field F>
struct StructCoalgebra {
    F field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    Matrix<F> comult;  // dim^2 x dim
    Matrix<F> counit;  // 1 x dim

    StructCoalgebra(const F& f, std::size_t d, std::vector<std::string> lab)
        : field(f), dim(d), labels(std::move(lab)), comult(f, d * d, d), counit(f, 1, d) {}

    typename F::Elem counit_of(const Matrix<F>& v) const {
        auto s = field.zero();
        for (std::size_t i = 0; i < dim; ++i) s = field.add(s, field.mul(counit.at(0, i), v[i]));
        return s;
    }

    /// Iterated comultiplication C -> C^{(x) k}, k >= 1.
    Matrix<F> iterated_comult(std::size_t k) const {
        Matrix<F> m = Matrix<F>::identity(field, dim);
        std::size_t cur = 1;
        while (cur < k) {
            // expand the leftmost factor
            m = kron(comult, Matrix<F>::identity(field, ipow(dim, cur - 1))) * m;
            ++cur;
        }
        return m;
    }

    static std::size_t ipow(std::size_t b, std::size_t e) {
        std::size_t r = 1;
        while (e--) r *= b;
        return r;
    }
};

template <Field F>
struct HopfAlgebra {
    StructAlgebra<F> algebra;
    StructCoalgebra<F> coalgebra;
    std::optional<Matrix<F>> antipode;  // dim x dim
    bool antipode_bijective = false;

    std::size_t dim() const { return algebra.dim; }
    const F& field() const { return algebra.field; }
    const std::vector<std::string>& labels() const { return algebra.labels; }

    const Matrix<F>& antipode_or_throw() const {
        if (!antipode) throw InputError("operation requires an antipode, none present");
        return *antipode;
    }

    Matrix<F> antipode_inverse() const {
        auto inv = doihopf::inverse(antipode_or_throw());
        if (!inv) throw InputError("operation requires a bijective antipode");
        return *inv;
    }
};

// ---------------------------------------------------------------------------
// Validators
// ---------------------------------------------------------------------------

template <Field F>
ValidationReport validate_algebra(const StructAlgebra<F>& a) {
    ValidationReport rep;
    const F& f = a.field;
    const auto* lbl = &a.labels;
    if (a.mult.rows() != a.dim || a.mult.cols() != a.dim * a.dim || a.unit.rows() != a.dim) {
        rep.add("structure constant shapes", "mult " + a.mult.shape());
        return rep;
    }
    for (std::size_t i = 0; i < a.dim && rep.ok(); ++i) {
        const auto ei = Matrix<F>::basis_vector(f, a.dim, i);
        if (a.mul_vec(a.unit, ei) != ei || a.mul_vec(ei, a.unit) != ei)
            rep.add("unit law", detail::tuple_label(i, {a.dim}, {lbl}));
    }
    for (std::size_t i = 0; i < a.dim; ++i) {
        const auto ei = Matrix<F>::basis_vector(f, a.dim, i);
        for (std::size_t j = 0; j < a.dim; ++j) {
            const auto ej = Matrix<F>::basis_vector(f, a.dim, j);
            const auto pij = a.mul_vec(ei, ej);
            for (std::size_t k = 0; k < a.dim; ++k) {
                const auto ek = Matrix<F>::basis_vector(f, a.dim, k);
                if (a.mul_vec(pij, ek) != a.mul_vec(ei, a.mul_vec(ej, ek))) {
                    rep.add("associativity",
                            detail::tuple_label(i * a.dim * a.dim + j * a.dim + k,
                                                {a.dim, a.dim, a.dim}, {lbl, lbl, lbl}));
                    return rep;
                }
            }
        }
    }
    return rep;
}

template <Field F>
ValidationReport validate_coalgebra(const StructCoalgebra<F>& c) {
    ValidationReport rep;
    const F& f = c.field;
    const auto* lbl = &c.labels;
    if (c.comult.rows() != c.dim * c.dim || c.comult.cols() != c.dim || c.counit.cols() != c.dim) {
        rep.add("structure constant shapes", "comult " + c.comult.shape());
        return rep;
    }
    const auto id = Matrix<F>::identity(f, c.dim);
    const auto coassoc_l = kron(c.comult, id) * c.comult;
    const auto coassoc_r = kron(id, c.comult) * c.comult;
    detail::check_law(rep, "coassociativity", coassoc_l, coassoc_r, {c.dim}, {lbl});
    detail::check_law(rep, "counit law (left)", kron(c.counit, id) * c.comult, id, {c.dim}, {lbl});
    detail::check_law(rep, "counit law (right)", kron(id, c.counit) * c.comult, id, {c.dim}, {lbl});
    return rep;
}

namespace detail {

// Product of two vectors in H (x) H using the structure constants of H.
template <Field F>
Matrix<F> mul_vec_tensor2(const StructAlgebra<F>& a, const Matrix<F>& u, const Matrix<F>& v) {
    const F& f = a.field;
    const std::size_t d = a.dim;
    Matrix<F> w(f, d * d, 1);
    for (std::size_t pq = 0; pq < d * d; ++pq) {
        if (f.is_zero(u[pq])) continue;
        const std::size_t p = pq / d, q = pq % d;
        for (std::size_t rs = 0; rs < d * d; ++rs) {
            if (f.is_zero(v[rs])) continue;
            const std::size_t r = rs / d, s = rs % d;
            const auto coeff = f.mul(u[pq], v[rs]);
            const auto pr = a.mul_vec(Matrix<F>::basis_vector(f, d, p),
                                      Matrix<F>::basis_vector(f, d, r));
            const auto qs = a.mul_vec(Matrix<F>::basis_vector(f, d, q),
                                      Matrix<F>::basis_vector(f, d, s));
            for (std::size_t m = 0; m < d; ++m) {
                if (f.is_zero(pr[m])) continue;
                for (std::size_t n = 0; n < d; ++n)
                    w[m * d + n] = f.add(w[m * d + n], f.mul(coeff, f.mul(pr[m], qs[n])));
            }
        }
    }
    return w;
}

}  // namespace detail

template <Field F>
ValidationReport validate_bialgebra(const HopfAlgebra<F>& h) {
    ValidationReport rep = validate_algebra(h.algebra);
    rep.merge(validate_coalgebra(h.coalgebra));
    if (!rep.ok()) return rep;
    const F& f = h.field();
    const std::size_t d = h.dim();
    const auto* lbl = &h.labels();

    // comultiplication is an algebra map
    bool hit = false;
    for (std::size_t i = 0; i < d && !hit; ++i)
        for (std::size_t j = 0; j < d && !hit; ++j) {
            const auto prod = h.algebra.mul_vec(Matrix<F>::basis_vector(f, d, i),
                                                Matrix<F>::basis_vector(f, d, j));
            const auto delta_prod = h.coalgebra.comult * prod;
            const auto di = h.coalgebra.comult * Matrix<F>::basis_vector(f, d, i);
            const auto dj = h.coalgebra.comult * Matrix<F>::basis_vector(f, d, j);
            if (delta_prod != detail::mul_vec_tensor2(h.algebra, di, dj)) {
                rep.add("comultiplication is an algebra map",
                        detail::tuple_label(i * d + j, {d, d}, {lbl, lbl}));
                hit = true;
            }
        }
    if (h.coalgebra.comult * h.algebra.unit != kron(h.algebra.unit, h.algebra.unit))
        rep.add("comultiplication is an algebra map", "(1)");

    // counit is an algebra map
    detail::check_law(rep, "counit is an algebra map", h.coalgebra.counit * h.algebra.mult,
                      kron(h.coalgebra.counit, h.coalgebra.counit), {d, d}, {lbl, lbl});
    if (!f.eq(h.coalgebra.counit_of(h.algebra.unit), f.one()))
        rep.add("counit is an algebra map", "(1)");
    return rep;
}

template <Field F>
ValidationReport validate_hopf(const HopfAlgebra<F>& h) {
    ValidationReport rep = validate_bialgebra(h);
    if (!rep.ok()) return rep;
    const F& f = h.field();
    const std::size_t d = h.dim();
    const auto* lbl = &h.labels();
    if (h.antipode) {
        const auto& s = *h.antipode;
        if (s.rows() != d || s.cols() != d) {
            rep.add("antipode axiom", "shape " + s.shape());
            return rep;
        }
        const auto id = Matrix<F>::identity(f, d);
        const auto target = h.algebra.unit * h.coalgebra.counit;  // d x d
        detail::check_law(rep, "antipode axiom (left)",
                          h.algebra.mult * kron(s, id) * h.coalgebra.comult, target, {d}, {lbl});
        detail::check_law(rep, "antipode axiom (right)",
                          h.algebra.mult * kron(id, s) * h.coalgebra.comult, target, {d}, {lbl});
        if (h.antipode_bijective != inverse(s).has_value())
            rep.add("antipode bijectivity flag", "flag disagrees with the antipode matrix");
    } else if (h.antipode_bijective) {
        rep.add("antipode bijectivity flag", "flag set but no antipode present");
    }
    return rep;
}

/// Builds a Hopf algebra value, setting the bijectivity flag from the
/// antipode matrix, and validates it (throws ValidationError on failure).
template <Field F>
HopfAlgebra<F> make_hopf(StructAlgebra<F> alg, StructCoalgebra<F> coa,
                         std::optional<Matrix<F>> antipode) {
    HopfAlgebra<F> h{std::move(alg), std::move(coa), std::move(antipode), false};
    if (h.antipode) h.antipode_bijective = inverse(*h.antipode).has_value();
    auto rep = validate_hopf(h);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return h;
}

// ---------------------------------------------------------------------------
// Duals, convolution, regular actions
// ---------------------------------------------------------------------------

inline std::vector<std::string> dual_labels(const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(l + "*");
    return out;
}

/// C* with the convolution product on the dual basis; the unit is the counit.
template <Field F>
StructAlgebra<F> dual_algebra(const StructCoalgebra<F>& c) {
    StructAlgebra<F> a(c.field, c.dim, dual_labels(c.labels));
    for (std::size_t ij = 0; ij < c.dim * c.dim; ++ij)
        for (std::size_t k = 0; k < c.dim; ++k) a.mult.at(k, ij) = c.comult.at(ij, k);
    for (std::size_t k = 0; k < c.dim; ++k) a.unit[k] = c.counit.at(0, k);
    return a;
}

/// A* with the coproduct dual to the product; the counit is evaluation at 1.
template <Field F>
StructCoalgebra<F> dual_coalgebra(const StructAlgebra<F>& a) {
    StructCoalgebra<F> c(a.field, a.dim, dual_labels(a.labels));
    for (std::size_t ij = 0; ij < a.dim * a.dim; ++ij)
        for (std::size_t k = 0; k < a.dim; ++k) c.comult.at(ij, k) = a.mult.at(k, ij);
    for (std::size_t k = 0; k < a.dim; ++k) c.counit.at(0, k) = a.unit[k];
    return c;
}

template <Field F>
HopfAlgebra<F> dual_hopf(const HopfAlgebra<F>& h) {
    std::optional<Matrix<F>> s;
    if (h.antipode) s = h.antipode->transpose();
    return make_hopf(dual_algebra(h.coalgebra), dual_coalgebra(h.algebra), std::move(s));
}

/// Convolution f * g = mult_A o (f (x) g) o comult_C on Hom(C, A).
template <Field F>
Matrix<F> convolution(const Matrix<F>& fm, const Matrix<F>& gm, const StructCoalgebra<F>& c,
                      const StructAlgebra<F>& a) {
    if (fm.rows() != a.dim || fm.cols() != c.dim || gm.rows() != a.dim || gm.cols() != c.dim)
        throw InputError("convolution: maps must be dim(A) x dim(C)");
    return a.mult * kron(fm, gm) * c.comult;
}

/// The convolution unit u_A o eps_C.
template <Field F>
Matrix<F> convolution_unit(const StructCoalgebra<F>& c, const StructAlgebra<F>& a) {
    return a.unit * c.counit;
}

/// Left regular action of a functional: c |-> sum <c*, c_(2)> c_(1).
template <Field F>
Matrix<F> cstar_act_left(const StructCoalgebra<F>& c, const Matrix<F>& cstar) {
    const auto id = Matrix<F>::identity(c.field, c.dim);
    return kron(id, cstar.transpose()) * c.comult;
}

/// Right regular action of a functional: c |-> sum <c*, c_(1)> c_(2).
template <Field F>
Matrix<F> cstar_act_right(const StructCoalgebra<F>& c, const Matrix<F>& cstar) {
    const auto id = Matrix<F>::identity(c.field, c.dim);
    return kron(cstar.transpose(), id) * c.comult;
}

// ---------------------------------------------------------------------------
// Opposites, co-opposites, tensor products
// ---------------------------------------------------------------------------

template <Field F>
StructAlgebra<F> op_algebra(const StructAlgebra<F>& a) {
    StructAlgebra<F> r = a;
    r.mult = a.mult * flip(a.field, a.dim, a.dim);
    return r;
}

template <Field F>
StructCoalgebra<F> cop_coalgebra(const StructCoalgebra<F>& c) {
    StructCoalgebra<F> r = c;
    r.comult = flip(c.field, c.dim, c.dim) * c.comult;
    return r;
}

/// H^op: opposite multiplication; the antipode becomes S^{-1}.
template <Field F>
HopfAlgebra<F> op_hopf(const HopfAlgebra<F>& h) {
    std::optional<Matrix<F>> s;
    if (h.antipode) s = h.antipode_inverse();
    return make_hopf(op_algebra(h.algebra), h.coalgebra, std::move(s));
}

/// H^cop: opposite comultiplication; the antipode becomes S^{-1}.
template <Field F>
HopfAlgebra<F> cop_hopf(const HopfAlgebra<F>& h) {
    std::optional<Matrix<F>> s;
    if (h.antipode) s = h.antipode_inverse();
    return make_hopf(h.algebra, cop_coalgebra(h.coalgebra), std::move(s));
}

inline std::vector<std::string> tensor_labels(const std::vector<std::string>& a,
                                              const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x + "\xE2\x8A\x97" + y);  // x âŠ— y
    return out;
}

template <Field F>
StructAlgebra<F> tensor_algebra(const StructAlgebra<F>& a, const StructAlgebra<F>& b) {
    const F& f = a.field;
    StructAlgebra<F> r(f, a.dim * b.dim, tensor_labels(a.labels, b.labels));
    // (A(x)B) (x) (A(x)B) -> (A(x)A) (x) (B(x)B)
    const auto mid = tensor_permute(f, {a.dim, b.dim, a.dim, b.dim}, {0, 2, 1, 3});
    r.mult = kron(a.mult, b.mult) * mid;
    r.unit = kron(a.unit, b.unit);
    return r;
}

template <Field F>
StructCoalgebra<F> tensor_coalgebra(const StructCoalgebra<F>& a, const StructCoalgebra<F>& b) {
    const F& f = a.field;
    StructCoalgebra<F> r(f, a.dim * b.dim, tensor_labels(a.labels, b.labels));
    const auto mid = tensor_permute(f, {a.dim, a.dim, b.dim, b.dim}, {0, 2, 1, 3});
    r.comult = mid * kron(a.comult, b.comult);
    r.counit = kron(a.counit, b.counit);
    return r;
}

template <Field F>
HopfAlgebra<F> tensor_hopf(const HopfAlgebra<F>& a, const HopfAlgebra<F>& b) {
    std::optional<Matrix<F>> s;
    if (a.antipode && b.antipode) s = kron(*a.antipode, *b.antipode);
    return make_hopf(tensor_algebra(a.algebra, b.algebra),
                     tensor_coalgebra(a.coalgebra, b.coalgebra), std::move(s));
}

/// Solves for the antipode of a bialgebra (the convolution inverse of the
/// identity), if one exists.  The antipode of a bialgebra is unique.
template <Field F>
std::optional<Matrix<F>> solve_antipode(const StructAlgebra<F>& alg,
                                        const StructCoalgebra<F>& coa) {
    const F& f = alg.field;
    const std::size_t d = alg.dim;
    const auto id = Matrix<F>::identity(f, d);
    const auto target = (alg.unit * coa.counit).vectorize();
    // rows: vec(mult o (S (x) I) o comult) and vec(mult o (I (x) S) o comult), linear in S
    Matrix<F> sys(f, 2 * d * d, d * d);
    for (std::size_t col = 0; col < d * d; ++col) {
        Matrix<F> e(f, d * d, 1);
        e[col] = f.one();
        const auto s = Matrix<F>::from_vector(e, d, d);
        const auto l = (alg.mult * kron(s, id) * coa.comult).vectorize();
        const auto r = (alg.mult * kron(id, s) * coa.comult).vectorize();
        for (std::size_t i = 0; i < d * d; ++i) {
            sys.at(i, col) = l[i];
            sys.at(d * d + i, col) = r[i];
        }
    }
    Matrix<F> rhs(f, 2 * d * d, 1);
    for (std::size_t i = 0; i < d * d; ++i) {
        rhs[i] = target[i];
        rhs[d * d + i] = target[i];
    }
    auto sol = solve_affine(sys, rhs);
    if (!sol.particular) return std::nullopt;
    return Matrix<F>::from_vector(*sol.particular, d, d);
}

}  // namespace doihopf
