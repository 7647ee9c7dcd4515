// Validation reports: every structural axiom check produces one of these
// instead of a bare bool, so failures always name the violated law and the
// first offending basis tuple.

#pragma once

#include "matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace doihopf {

struct Violation {
    std::string law;    // e.g. "associativity", "antipode axiom"
    std::string where;  // first offending basis tuple, e.g. "(g, x, gx)"
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string law, std::string where) {
        violations.push_back({std::move(law), std::move(where)});
    }

    void merge(const ValidationReport& o) {
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }

    std::string summary() const {
        if (ok()) return "valid";
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "\n";
            s += "violated: " + v.law + " at " + v.where;
        }
        return s;
    }
};

/// Thrown by constructors of validated objects when validation fails.
struct ValidationError : std::runtime_error {
    ValidationReport report;
    explicit ValidationError(ValidationReport r)
        : std::runtime_error(r.summary()), report(std::move(r)) {}
};

namespace detail {

/// Decodes flat column index `col` of a matrix identity whose columns are
/// indexed by basis tuples with the given factor dimensions and labels.
inline std::string tuple_label(std::size_t col, const std::vector<std::size_t>& dims,
                               const std::vector<const std::vector<std::string>*>& labels) {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t t = dims.size(); t-- > 0;) {
        idx[t] = col % dims[t];
        col /= dims[t];
    }
    std::string s = "(";
    for (std::size_t t = 0; t < dims.size(); ++t) {
        if (t) s += ", ";
        s += labels[t] && idx[t] < labels[t]->size() ? (*labels[t])[idx[t]]
                                                     : "#" + std::to_string(idx[t]);
    }
    return s + ")";
}

/// Checks the matrix law lhs == rhs whose columns range over basis tuples;
/// on failure records the law with the first offending tuple.
template <Field F>
void check_law(ValidationReport& rep, const std::string& law, const Matrix<F>& lhs,
               const Matrix<F>& rhs, const std::vector<std::size_t>& dims,
               const std::vector<const std::vector<std::string>*>& labels) {
    const F& f = lhs.field();
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        rep.add(law, "shape " + lhs.shape() + " vs " + rhs.shape());
        return;
    }
    for (std::size_t j = 0; j < lhs.cols(); ++j)
        for (std::size_t i = 0; i < lhs.rows(); ++i)
            if (!f.eq(lhs.at(i, j), rhs.at(i, j))) {
                rep.add(law, tuple_label(j, dims, labels));
                return;
            }
}

}  // namespace detail

}  // namespace doihopf
