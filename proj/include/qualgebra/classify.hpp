#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qualgebra/algebra.hpp"

namespace qlab {

struct classification_result {
    int size = 0;
    std::string kind;  // "qualgebra" or "squandle"
    std::vector<qualgebra> qualgebras;
    std::vector<squandle> squandles;
    long long trivial_count = 0;     // counted only on full (non-filtered) runs
    long long nontrivial_count = 0;
};

// Exhaustive enumeration up to isomorphism. Representatives come in canonical
// (lexicographically least table) order. Throws SizeTooLarge past the budget.
classification_result enumerate_qualgebras(int n, bool nontrivial_only,
                                           double budget_seconds = 60.0);
classification_result enumerate_squandles(int n, bool nontrivial_only,
                                          double budget_seconds = 60.0);

// All quandles on n elements up to isomorphism (internal workhorse, exposed
// for tests).
std::vector<quandle> enumerate_quandles(int n, double budget_seconds = 60.0);

// All diamond tables turning q into a qualgebra; not deduplicated.
std::vector<binary_table> qualgebrizations(const quandle& q,
                                           double budget_seconds = 60.0);
// All square maps turning q into a squandle; not deduplicated.
std::vector<unary_table> squandlizations(const quandle& q);

struct property_report_t {
    bool commutative = false;
    bool cancellative = false;
    bool unital = false;
    bool associative = false;
    bool unital_associative = false;
    std::optional<elem> unit;
};
property_report_t property_report(const qualgebra& q);

}  // namespace qlab
