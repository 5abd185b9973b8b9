#pragma once

#include <stdexcept>
#include <string>

namespace liebialg {

/// Base class of all errors thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands of incompatible dimension.
class dimension_mismatch : public error {
public:
    explicit dimension_mismatch(const std::string& msg) : error("dimension mismatch: " + msg) {}
};

/// Structure constants violate c[i][j][k] = -c[j][i][k].  Indices are 1-based.
class antisymmetry_violation : public error {
public:
    antisymmetry_violation(int i, int j, int k)
        : error("antisymmetry violation at c[" + std::to_string(i) + "][" + std::to_string(j) +
                "][" + std::to_string(k) + "]"),
          i(i), j(j), k(k) {}
    int i, j, k;
};

/// A family-specific precondition of a b-type solution failed.
class constraint_violated : public error {
public:
    explicit constraint_violated(const std::string& which)
        : error("constraint violated: " + which), which(which) {}
    std::string which;
};

/// Bivector has components outside h^V.
class not_b_type : public error {
public:
    explicit not_b_type(const std::string& msg) : error("not a b-type bivector: " + msg) {}
};

/// The s matrix does not have the required unit-eigenvalue structure.
class eigenstructure_violated : public error {
public:
    explicit eigenstructure_violated(const std::string& msg)
        : error("eigenstructure violated: " + msg) {}
};

/// P x Q pairing block of a Manin triple is singular.
class degenerate_pairing : public error {
public:
    degenerate_pairing() : error("degenerate P x Q pairing") {}
};

/// Dimensions of an extracted bialgebra do not match the target algebra.
class basis_mismatch : public error {
public:
    explicit basis_mismatch(const std::string& msg) : error("basis mismatch: " + msg) {}
};

/// Malformed parameters (parse errors, invalid metric strings, bad matrices).
class bad_params : public error {
public:
    explicit bad_params(const std::string& msg) : error("bad parameters: " + msg) {}
};

/// Matrix failed the SO0(1,n) membership test.
class not_in_group : public error {
public:
    explicit not_in_group(const std::string& msg) : error("not in SO0(1,n): " + msg) {}
};

/// A decomposition hit a numerically degenerate configuration.
class numerical_breakdown : public error {
public:
    explicit numerical_breakdown(const std::string& msg) : error("numerical breakdown: " + msg) {}
};

}  // namespace liebialg
