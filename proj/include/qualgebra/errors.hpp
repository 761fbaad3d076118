#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace qlab {

// Base for all library errors. `code` is a stable machine-readable tag,
// `what()` a human-readable message.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// A structure table failed an axiom. Carries the axiom tag (Q_SD, Q_Inv,
// Q_Idem, QA_Comp, QA_D, QA_Comm, SQ_1, SQ_2, G_Assoc, ...) and a witness
// triple (unused slots are -1).
class axiom_violation : public error {
public:
    axiom_violation(std::string axiom, std::array<int, 3> witness,
                    const std::string& msg)
        : error("AxiomViolation", msg),
          axiom_(std::move(axiom)), witness_(witness) {}
    const std::string& axiom() const { return axiom_; }
    const std::array<int, 3>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::array<int, 3> witness_;
};

inline error non_bijective_translation(int column) {
    return error("NonBijectiveTranslation",
                 "column " + std::to_string(column) +
                     " of the lhd table is not a permutation");
}

inline error kind_mismatch(const std::string& msg) { return error("KindMismatch", msg); }
inline error mode_mismatch(const std::string& msg) { return error("ModeMismatch", msg); }
inline error shape_mismatch(const std::string& msg) { return error("ShapeMismatch", msg); }
inline error site_mismatch(const std::string& msg) { return error("SiteMismatch", msg); }
inline error invalid_direction(const std::string& msg) { return error("InvalidDirection", msg); }
inline error unknown_name(const std::string& name) {
    return error("UnknownName", "no builtin named '" + name + "'");
}
inline error unknown_move(const std::string& name) {
    return error("UnknownMove", "no Reidemeister move named '" + name + "'");
}
inline error size_too_large(const std::string& msg) { return error("SizeTooLarge", msg); }
inline error not_a_cocycle(const std::string& msg) { return error("NotACocycle", msg); }
inline error not_reduced(const std::string& msg) { return error("NotReduced", msg); }
inline error non_trivalent(const std::string& msg) { return error("NonTrivalent", msg); }
inline error position_out_of_range(const std::string& msg) {
    return error("PositionOutOfRange", msg);
}
inline error inconsistent_lattice(const std::string& msg) {
    return error("InconsistentLattice", msg);
}
inline error bad_input(const std::string& msg) { return error("BadInput", msg); }

}  // namespace qlab
