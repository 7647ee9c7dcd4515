// Comodule algebras, module coalgebras, validated Doi-Hopf data and
// finite-dimensional Doi-Hopf modules.
//
// Conventions (right-left throughout): A is a left H-comodule algebra with
// coaction A -> H (x) A, C is a right H-module coalgebra with action
// C (x) H -> C, and a Doi-Hopf module is a right A-module and left
// C-comodule whose coaction intertwines the action through H.

#pragma once

#include "algebra.hpp"

namespace doihopf {

template <Field F>
bool same_hopf(const HopfAlgebra<F>& x, const HopfAlgebra<F>& y) {
    if (x.dim() != y.dim()) return false;
    if (x.algebra.mult != y.algebra.mult || x.algebra.unit != y.algebra.unit) return false;
    if (x.coalgebra.comult != y.coalgebra.comult || x.coalgebra.counit != y.coalgebra.counit)
        return false;
    if (x.antipode.has_value() != y.antipode.has_value()) return false;
    if (x.antipode && *x.antipode != *y.antipode) return false;
    return true;
}

/// A left H-comodule algebra: coaction is a matrix A -> H (x) A.
template <Field F>
struct ComoduleAlgebra {
    HopfAlgebra<F> h;
    StructAlgebra<F> algebra;
    Matrix<F> coaction;  // (dim H * dim A) x dim A

    /// Iterated coaction A -> H^{(x) k} (x) A.
    Matrix<F> iterated_coaction(std::size_t k) const {
        const F& f = algebra.field;
        Matrix<F> m = Matrix<F>::identity(f, algebra.dim);
        for (std::size_t step = 0; step < k; ++step) {
            // expand: H^{(x) step} (x) A -> H^{(x) step} (x) (H (x) A)
            m = kron(Matrix<F>::identity(f, StructCoalgebra<F>::ipow(h.dim(), step)), coaction) * m;
        }
        return m;
    }
};

/// A right H-module coalgebra: action is a matrix C (x) H -> C.
template <Field F>
struct ModuleCoalgebra {
    HopfAlgebra<F> h;
    StructCoalgebra<F> coalgebra;
    Matrix<F> action;  // dim C x (dim C * dim H)

    /// Matrix of c |-> c . v for a fixed v in H.
    Matrix<F> act_by(const Matrix<F>& v) const {
        const F& f = coalgebra.field;
        return action * kron(Matrix<F>::identity(f, coalgebra.dim), v);
    }
};

template <Field F>
struct DoiHopfDatum {
    HopfAlgebra<F> h;
    ComoduleAlgebra<F> a;
    ModuleCoalgebra<F> c;

    const F& field() const { return h.field(); }
    std::size_t dim_h() const { return h.dim(); }
    std::size_t dim_a() const { return a.algebra.dim; }
    std::size_t dim_c() const { return c.coalgebra.dim; }
};

template <Field F>
ValidationReport validate_comodule_algebra(const ComoduleAlgebra<F>& ca) {
    ValidationReport rep = validate_algebra(ca.algebra);
    const F& f = ca.algebra.field;
    const std::size_t a = ca.algebra.dim, h = ca.h.dim();
    const auto* lbl = &ca.algebra.labels;
    if (ca.coaction.rows() != h * a || ca.coaction.cols() != a) {
        rep.add("coaction shape", ca.coaction.shape());
        return rep;
    }
    const auto ida = Matrix<F>::identity(f, a);
    const auto idh = Matrix<F>::identity(f, h);
    // comodule axioms
    detail::check_law(rep, "coaction coassociativity",
                      kron(ca.h.coalgebra.comult, ida) * ca.coaction,
                      kron(idh, ca.coaction) * ca.coaction, {a}, {lbl});
    detail::check_law(rep, "coaction counit law",
                      kron(ca.h.coalgebra.counit, ida) * ca.coaction, ida, {a}, {lbl});
    // coaction is an algebra map into H (x) A
    const auto mid = tensor_permute(f, {h, a, h, a}, {0, 2, 1, 3});
    const auto mult_ha = kron(ca.h.algebra.mult, ca.algebra.mult) * mid;
    detail::check_law(rep, "coaction is an algebra map", ca.coaction * ca.algebra.mult,
                      mult_ha * kron(ca.coaction, ca.coaction), {a, a}, {lbl, lbl});
    if (ca.coaction * ca.algebra.unit != kron(ca.h.algebra.unit, ca.algebra.unit))
        rep.add("coaction is an algebra map", "(1)");
    return rep;
}

template <Field F>
ValidationReport validate_module_coalgebra(const ModuleCoalgebra<F>& mc) {
    ValidationReport rep = validate_coalgebra(mc.coalgebra);
    const F& f = mc.coalgebra.field;
    const std::size_t c = mc.coalgebra.dim, h = mc.h.dim();
    const auto* cl = &mc.coalgebra.labels;
    const auto* hl = &mc.h.labels();
    if (mc.action.rows() != c || mc.action.cols() != c * h) {
        rep.add("action shape", mc.action.shape());
        return rep;
    }
    const auto idc = Matrix<F>::identity(f, c);
    const auto idh = Matrix<F>::identity(f, h);
    // module axioms
    detail::check_law(rep, "action associativity", mc.action * kron(mc.action, idh),
                      mc.action * kron(idc, mc.h.algebra.mult), {c, h, h}, {cl, hl, hl});
    detail::check_law(rep, "action unit law", mc.action * kron(idc, mc.h.algebra.unit), idc, {c},
                      {cl});
    // the action is a coalgebra map: comult and counit are H-equivariant
    const auto mid = tensor_permute(f, {c, c, h, h}, {0, 2, 1, 3});
    detail::check_law(rep, "action is a coalgebra map (comult)",
                      mc.coalgebra.comult * mc.action,
                      kron(mc.action, mc.action) * mid *
                          kron(mc.coalgebra.comult, mc.h.coalgebra.comult),
                      {c, h}, {cl, hl});
    detail::check_law(rep, "action is a coalgebra map (counit)", mc.coalgebra.counit * mc.action,
                      kron(mc.coalgebra.counit, mc.h.coalgebra.counit), {c, h}, {cl, hl});
    return rep;
}

template <Field F>
ValidationReport validate_datum(const DoiHopfDatum<F>& d) {
    ValidationReport rep;
    if (!same_hopf(d.h, d.a.h)) rep.add("shared bialgebra", "comodule algebra carries a different H");
    if (!same_hopf(d.h, d.c.h)) rep.add("shared bialgebra", "module coalgebra carries a different H");
    rep.merge(d.h.antipode ? validate_hopf(d.h) : validate_bialgebra(d.h));
    rep.merge(validate_comodule_algebra(d.a));
    rep.merge(validate_module_coalgebra(d.c));
    return rep;
}

template <Field F>
DoiHopfDatum<F> make_datum(HopfAlgebra<F> h, ComoduleAlgebra<F> a, ModuleCoalgebra<F> c) {
    DoiHopfDatum<F> d{std::move(h), std::move(a), std::move(c)};
    auto rep = validate_datum(d);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return d;
}

// ---------------------------------------------------------------------------
// Canonical structure maps used throughout
// ---------------------------------------------------------------------------

/// Action on C (x) N induced from a right A-module action N (x) A -> N:
/// (c (x) n) . a  =  sum  c . a_<-1>  (x)  n a_<0>.
template <Field F>
Matrix<F> induced_action(const DoiHopfDatum<F>& d, const Matrix<F>& n_action) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a(), h = d.dim_h();
    const std::size_t n = n_action.rows();
    const auto pre = kron(Matrix<F>::identity(f, c * n), d.a.coaction);   // (c n h a) x (c n a)
    const auto perm = tensor_permute(f, {c, n, h, a}, {0, 2, 1, 3});      // -> (c h n a)
    return kron(d.c.action, n_action) * perm * pre;
}

/// Coaction on C (x) N: comult on the C factor.
template <Field F>
Matrix<F> induced_coaction(const DoiHopfDatum<F>& d, std::size_t n_dim) {
    return kron(d.c.coalgebra.comult, Matrix<F>::identity(d.field(), n_dim));
}

/// Left A-action a . (c (x) b) = c (x) ab on C (x) A, as a matrix
/// A (x) C (x) A -> C (x) A.
template <Field F>
Matrix<F> left_action_on_ca(const DoiHopfDatum<F>& d) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a();
    const auto perm = tensor_permute(f, {a, c, a}, {1, 0, 2});  // -> (c a a)
    return kron(Matrix<F>::identity(f, c), d.a.algebra.mult) * perm;
}

/// Action on C (x) C (x) A: the two C factors are hit by consecutive legs
/// of the iterated coaction, the A factor by right multiplication.
template <Field F>
Matrix<F> cca_action(const DoiHopfDatum<F>& d) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a(), h = d.dim_h();
    const auto pre = kron(Matrix<F>::identity(f, c * c * a), d.a.iterated_coaction(2));
    const auto perm = tensor_permute(f, {c, c, a, h, h, a}, {0, 3, 1, 4, 2, 5});
    return kron(d.c.action, kron(d.c.action, d.a.algebra.mult)) * perm * pre;
}

template <Field F>
Matrix<F> cca_coaction(const DoiHopfDatum<F>& d) {
    return kron(d.c.coalgebra.comult, Matrix<F>::identity(d.field(), d.dim_c() * d.dim_a()));
}

// ---------------------------------------------------------------------------
// Canonical building blocks
// ---------------------------------------------------------------------------

template <Field F>
StructAlgebra<F> trivial_algebra(const F& f) {
    StructAlgebra<F> a(f, 1, {"1"});
    a.mult.at(0, 0) = f.one();
    a.unit[0] = f.one();
    return a;
}

template <Field F>
StructCoalgebra<F> trivial_coalgebra(const F& f) {
    StructCoalgebra<F> c(f, 1, {"1"});
    c.comult.at(0, 0) = f.one();
    c.counit.at(0, 0) = f.one();
    return c;
}

/// A = k with the trivial coaction 1 |-> 1_H (x) 1.
template <Field F>
ComoduleAlgebra<F> trivial_comodule_algebra(const HopfAlgebra<F>& h) {
    return {h, trivial_algebra(h.field()), h.algebra.unit};
}

/// C = H with the right regular action.
template <Field F>
ModuleCoalgebra<F> regular_module_coalgebra(const HopfAlgebra<F>& h) {
    return {h, h.coalgebra, h.algebra.mult};
}

/// C = H with the trivial action c . x = eps(x) c.
template <Field F>
ModuleCoalgebra<F> trivial_module_coalgebra(const HopfAlgebra<F>& h) {
    const auto idh = Matrix<F>::identity(h.field(), h.dim());
    return {h, h.coalgebra, kron(idh, h.coalgebra.counit)};
}

/// The datum (k, k, C) attaching an arbitrary coalgebra to the trivial
/// bialgebra; every coalgebra question lives here.
template <Field F>
DoiHopfDatum<F> coalgebra_datum(const F& f, const StructCoalgebra<F>& c) {
    HopfAlgebra<F> triv{trivial_algebra(f), trivial_coalgebra(f),
                        Matrix<F>::identity(f, 1), true};
    ComoduleAlgebra<F> a = trivial_comodule_algebra(triv);
    ModuleCoalgebra<F> mc{triv, c, Matrix<F>::identity(f, c.dim)};
    return make_datum(std::move(triv), std::move(a), std::move(mc));
}

/// The datum (H, k, H): classical integral questions live here.
template <Field F>
DoiHopfDatum<F> classical_datum(const HopfAlgebra<F>& h) {
    return make_datum(h, trivial_comodule_algebra(h), regular_module_coalgebra(h));
}

// ---------------------------------------------------------------------------
// Doi-Hopf modules
// ---------------------------------------------------------------------------

template <Field F>
struct DoiHopfModule {
    DoiHopfDatum<F> datum;
    std::size_t dim = 0;
    Matrix<F> action;    // dim x (dim * dim A)
    Matrix<F> coaction;  // (dim C * dim) x dim
    std::vector<std::string> labels;
};

template <Field F>
ValidationReport validate_right_module(const StructAlgebra<F>& alg, const Matrix<F>& action,
                                       std::size_t dim) {
    ValidationReport rep;
    const F& f = alg.field;
    if (action.rows() != dim || action.cols() != dim * alg.dim) {
        rep.add("module action shape", action.shape());
        return rep;
    }
    const auto idm = Matrix<F>::identity(f, dim);
    const auto ida = Matrix<F>::identity(f, alg.dim);
    detail::check_law(rep, "module associativity", action * kron(action, ida),
                      action * kron(idm, alg.mult), {dim, alg.dim, alg.dim},
                      {nullptr, &alg.labels, &alg.labels});
    detail::check_law(rep, "module unit law", action * kron(idm, alg.unit), idm, {dim}, {nullptr});
    return rep;
}

template <Field F>
ValidationReport validate_module(const DoiHopfModule<F>& m) {
    ValidationReport rep = validate_right_module(m.datum.a.algebra, m.action, m.dim);
    const F& f = m.datum.field();
    const std::size_t c = m.datum.dim_c(), a = m.datum.dim_a();
    if (m.coaction.rows() != c * m.dim || m.coaction.cols() != m.dim) {
        rep.add("comodule coaction shape", m.coaction.shape());
        return rep;
    }
    const auto idm = Matrix<F>::identity(f, m.dim);
    const auto idc = Matrix<F>::identity(f, c);
    detail::check_law(rep, "comodule coassociativity",
                      kron(m.datum.c.coalgebra.comult, idm) * m.coaction,
                      kron(idc, m.coaction) * m.coaction, {m.dim}, {&m.labels});
    detail::check_law(rep, "comodule counit law",
                      kron(m.datum.c.coalgebra.counit, idm) * m.coaction, idm, {m.dim},
                      {&m.labels});
    // compatibility: the coaction of m.a is the diagonal of the two coactions
    const auto rhs = kron(m.datum.c.action, m.action) *
                     tensor_permute(f, {c, m.dim, m.datum.dim_h(), a}, {0, 2, 1, 3}) *
                     kron(m.coaction, m.datum.a.coaction);
    detail::check_law(rep, "action-coaction compatibility", m.coaction * m.action, rhs,
                      {m.dim, a}, {&m.labels, &m.datum.a.algebra.labels});
    return rep;
}

template <Field F>
DoiHopfModule<F> make_module(DoiHopfDatum<F> d, std::size_t dim, Matrix<F> action,
                             Matrix<F> coaction, std::vector<std::string> labels = {}) {
    if (labels.empty())
        for (std::size_t i = 0; i < dim; ++i) labels.push_back("m" + std::to_string(i));
    DoiHopfModule<F> m{std::move(d), dim, std::move(action), std::move(coaction),
                       std::move(labels)};
    auto rep = validate_module(m);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return m;
}

/// The induced module C (x) N of a right A-module N.
template <Field F>
DoiHopfModule<F> induced_module(const DoiHopfDatum<F>& d, const Matrix<F>& n_action,
                                std::size_t n_dim,
                                const std::vector<std::string>& n_labels = {}) {
    auto rep = validate_right_module(d.a.algebra, n_action, n_dim);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d.dim_c(); ++i)
        for (std::size_t j = 0; j < n_dim; ++j)
            labels.push_back(d.c.coalgebra.labels[i] + "\xE2\x8A\x97" +
                             (j < n_labels.size() ? n_labels[j] : "n" + std::to_string(j)));
    return make_module(d, d.dim_c() * n_dim, induced_action(d, n_action),
                       induced_coaction(d, n_dim), std::move(labels));
}

/// C (x) A with its standard structure maps.
template <Field F>
DoiHopfModule<F> module_ca(const DoiHopfDatum<F>& d) {
    return induced_module(d, d.a.algebra.mult, d.dim_a(), d.a.algebra.labels);
}

/// True iff f is simultaneously A-linear and C-colinear.
template <Field F>
bool check_morphism(const Matrix<F>& fmap, const DoiHopfModule<F>& m, const DoiHopfModule<F>& n) {
    if (fmap.rows() != n.dim || fmap.cols() != m.dim)
        throw InputError("check_morphism: map must be dim(N) x dim(M)");
    const F& f = m.datum.field();
    const auto ida = Matrix<F>::identity(f, m.datum.dim_a());
    const auto idc = Matrix<F>::identity(f, m.datum.dim_c());
    return fmap * m.action == n.action * kron(fmap, ida) &&
           n.coaction * fmap == kron(idc, fmap) * m.coaction;
}

/// Direct sum of two Doi-Hopf modules over the same datum, together with
/// the inclusion and projection matrices.
template <Field F>
struct DirectSum {
    DoiHopfModule<F> sum;
    Matrix<F> incl1, incl2, proj1, proj2;
};

template <Field F>
DirectSum<F> direct_sum(const DoiHopfModule<F>& m, const DoiHopfModule<F>& n) {
    const F& f = m.datum.field();
    const std::size_t t = m.dim + n.dim;
    Matrix<F> i1(f, t, m.dim), i2(f, t, n.dim), p1(f, m.dim, t), p2(f, n.dim, t);
    for (std::size_t k = 0; k < m.dim; ++k) i1.at(k, k) = p1.at(k, k) = f.one();
    for (std::size_t k = 0; k < n.dim; ++k) i2.at(m.dim + k, k) = p2.at(k, m.dim + k) = f.one();
    const auto ida = Matrix<F>::identity(f, m.datum.dim_a());
    const auto idc = Matrix<F>::identity(f, m.datum.dim_c());
    const auto action = i1 * m.action * kron(p1, ida) + i2 * n.action * kron(p2, ida);
    const auto coaction = kron(idc, i1) * m.coaction * p1 + kron(idc, i2) * n.coaction * p2;
    std::vector<std::string> labels;
    for (const auto& l : m.labels) labels.push_back(l + "\xE2\x82\x81");
    for (const auto& l : n.labels) labels.push_back(l + "\xE2\x82\x82");
    return {make_module(m.datum, t, action, coaction, std::move(labels)), std::move(i1),
            std::move(i2), std::move(p1), std::move(p2)};
}

// ---------------------------------------------------------------------------
// Actions coming from the smash product side
// ---------------------------------------------------------------------------

/// Evaluation pairing C* (x) C -> k as a 1 x c^2 matrix on dual bases.
template <Field F>
Matrix<F> eval_pairing(const F& f, std::size_t c) {
    Matrix<F> ev(f, 1, c * c);
    for (std::size_t j = 0; j < c; ++j) ev.at(0, j * c + j) = f.one();
    return ev;
}

/// Right action of A # C* on a Doi-Hopf module M:
/// m . (a # c*) = sum <c*, m_<-1>> m_<0> a, as a matrix
/// M (x) A (x) C* -> M (the smash basis is a_i # c*_j at index i*dimC + j).
template <Field F>
Matrix<F> smash_action(const DoiHopfModule<F>& m) {
    const F& f = m.datum.field();
    const std::size_t c = m.datum.dim_c(), a = m.datum.dim_a();
    const auto pre = kron(m.coaction, Matrix<F>::identity(f, a * c));  // (c m a c*) x (m a c*)
    const auto perm = tensor_permute(f, {c, m.dim, a, c}, {3, 0, 1, 2});
    return m.action * kron(eval_pairing(f, c), Matrix<F>::identity(f, m.dim * a)) * perm * pre;
}

/// Right action of Hom(C, A) on M: m <| g  =  sum m_<0> g(m_<-1>), as a
/// matrix M (x) Hom(C,A) -> M (the Hom(C,A) basis is c*_j (x) a_i at
/// index j*dimA + i; the basis map sends c_j to a_i).
template <Field F>
Matrix<F> triangle_action(const DoiHopfModule<F>& m) {
    const F& f = m.datum.field();
    const std::size_t c = m.datum.dim_c(), a = m.datum.dim_a();
    const auto pre = kron(m.coaction, Matrix<F>::identity(f, c * a));  // (c m c* a) x (m c* a)
    const auto perm = tensor_permute(f, {c, m.dim, c, a}, {2, 0, 1, 3});
    return m.action * kron(eval_pairing(f, c), Matrix<F>::identity(f, m.dim * a)) * perm * pre;
}

}  // namespace doihopf
