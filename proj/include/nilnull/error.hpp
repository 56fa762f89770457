#pragma once

// Error types shared by every nilnull module. All failures are reported by
// throwing a subclass of nilnull::Error; the kind() tag allows callers (the
// CLI in particular) to dispatch without RTTI chains.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nilnull {

enum class ErrorKind {
    DivisionByZero,
    DimensionMismatch,
    AntisymmetryViolation,
    CenterTooSmall,
    UnknownGenerator,
    AlgebraMismatch,
    NotAntisymmetric,
    OddDimension,
    IndexNotInSet,
    IndexInK,
    IndexNotInK,
    MembershipViolated,
    NotAntihermitian,
    NotFiltered,
    BracketMismatch,
    Degenerate,
    PfaffianConditionFailed,
    ConstructionBug,
    UndecidableForHandle,
    Inconclusive,
    NonScalarCentralImage,
    NotRealDeclared,
    SyntaxError,
    InvalidInput,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
        case ErrorKind::CenterTooSmall: return "CenterTooSmall";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorKind::OddDimension: return "OddDimension";
        case ErrorKind::IndexNotInSet: return "IndexNotInSet";
        case ErrorKind::IndexInK: return "IndexInK";
        case ErrorKind::IndexNotInK: return "IndexNotInK";
        case ErrorKind::MembershipViolated: return "MembershipViolated";
        case ErrorKind::NotAntihermitian: return "NotAntihermitian";
        case ErrorKind::NotFiltered: return "NotFiltered";
        case ErrorKind::BracketMismatch: return "BracketMismatch";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::PfaffianConditionFailed: return "PfaffianConditionFailed";
        case ErrorKind::ConstructionBug: return "ConstructionBug";
        case ErrorKind::UndecidableForHandle: return "UndecidableForHandle";
        case ErrorKind::Inconclusive: return "Inconclusive";
        case ErrorKind::NonScalarCentralImage: return "NonScalarCentralImage";
        case ErrorKind::NotRealDeclared: return "NotRealDeclared";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by validate_lie when c[j][k][m] != -c[k][j][m] (1-based indices).
class AntisymmetryViolation : public Error {
public:
    AntisymmetryViolation(std::size_t j, std::size_t k, std::size_t m)
        : Error(ErrorKind::AntisymmetryViolation,
                "structure constants violate antisymmetry at (j,k,m) = (" + std::to_string(j) + "," +
                    std::to_string(k) + "," + std::to_string(m) + ")"),
          j_(j), k_(k), m_(m) {}

    std::size_t j() const { return j_; }
    std::size_t k() const { return k_; }
    std::size_t m() const { return m_; }

private:
    std::size_t j_, k_, m_;
};

/// Raised by validate_lie when a nonzero combination of the B's is central.
/// witness() holds the coefficients of that combination.
class CenterTooSmall : public Error {
public:
    explicit CenterTooSmall(std::vector<mpq_class> witness)
        : Error(ErrorKind::CenterTooSmall, describe(witness)), witness_(std::move(witness)) {}

    const std::vector<mpq_class>& witness() const { return witness_; }

private:
    static std::string describe(const std::vector<mpq_class>& w) {
        std::string s = "the combination (";
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (j) s += ", ";
            s += w[j].get_str();
        }
        return s + ") of B-generators is central; rebase so that C_1..C_gamma span the center";
    }

    std::vector<mpq_class> witness_;
};

/// Raised by check_wellformed when an image fails bracket compatibility.
class BracketMismatch : public Error {
public:
    BracketMismatch(std::size_t first, std::size_t second, const std::string& detail)
        : Error(ErrorKind::BracketMismatch, "basis pair (" + std::to_string(first) + "," +
                                                std::to_string(second) + "): " + detail),
          first_(first), second_(second) {}

    // 1-based positions in the concatenated basis B_1..B_beta, C_1..C_gamma.
    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

private:
    std::size_t first_, second_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& detail)
        : Error(ErrorKind::SyntaxError, "at position " + std::to_string(position) + ": " + detail),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace nilnull
