#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majority/margins.hpp"
#include "majority/profile.hpp"

namespace majority {

// The domain-restriction conditions decided per alternative triple:
// Inada's list (dichotomous, echoic, antagonistic, value-restricted,
// taboo), Sen/Pattanaik's extremal restriction and limited agreement, and
// Saposnik's cycle balance.
enum class Condition {
    Dichotomous,
    Echoic,
    Antagonistic,
    ValueRestriction,
    Taboo,
    ExtremalRestriction,
    LimitedAgreement,
    CycleBalance,
};

inline constexpr std::array<Condition, 8> kAllConditions = {
    Condition::Dichotomous,      Condition::Echoic,
    Condition::Antagonistic,     Condition::ValueRestriction,
    Condition::Taboo,            Condition::ExtremalRestriction,
    Condition::LimitedAgreement, Condition::CycleBalance,
};

const char* condition_name(Condition c);

// Value of an alternative within one voter's ordering. The definitions are
// weak (R-based): with ties an alternative may hold several values at once.
//   best(a):   a R b and a R c
//   worst(a):  b R a and c R a
//   medium(a): (b R a and a R c) or (c R a and a R b)
// The strict reading (unique best/worst, P in place of R) is a known
// alternative; value restriction and taboo here use the weak one, which
// covers weak orderings uniformly.
enum class Value { Best, Worst, Medium };

const char* value_name(Value v);

bool has_value(const TripleType& type, int position, Value value);

struct ConditionVerdict {
    Condition condition = Condition::Dichotomous;
    bool holds = false;
    // Value restriction and taboo carry Inada's "number of voters is odd"
    // side constraint; `applicable` reports the parity of the concerned
    // voter count without suppressing the pattern check. Always true for
    // the other conditions.
    bool applicable = true;
    // Violation evidence, in role order (e.g. the strict holder before the
    // deviant). The sub-profile on exactly these voters still violates the
    // condition, which is how witnesses are re-validated.
    std::vector<int> witness_voters;
    // Human-readable certificate when the condition holds (the avoided
    // (alternative, value) pair, the unanimous pair, ...).
    std::string certificate;
    // Structured certificate pieces, as alternative indices.
    std::optional<std::pair<int, int>> certificate_pair;       // limited agreement, taboo
    std::optional<std::pair<int, Value>> certificate_avoided;  // value restriction
};

ConditionVerdict check_dichotomous(const Profile& p, const Triple& t);
ConditionVerdict check_echoic(const Profile& p, const Triple& t);
ConditionVerdict check_antagonistic(const Profile& p, const Triple& t);
ConditionVerdict check_value_restriction(const Profile& p, const Triple& t);
ConditionVerdict check_taboo(const Profile& p, const Triple& t);
ConditionVerdict check_extremal_restriction(const Profile& p, const Triple& t);
ConditionVerdict check_limited_agreement(const Profile& p, const Triple& t);
ConditionVerdict check_cycle_balance(const Profile& p, const Triple& t);

ConditionVerdict check_condition(Condition c, const Profile& p, const Triple& t);

struct ConditionReport {
    std::array<ConditionVerdict, 8> verdicts;
    // True iff some condition holds and is applicable (parity-restricted
    // conditions count only when applicable).
    bool any_satisfied = false;

    const ConditionVerdict& verdict(Condition c) const;
};

ConditionReport condition_report(const Profile& p, const Triple& t);

// A violated verdict's witness must itself violate the defining clause:
// re-running the checker on the witness sub-profile must report a
// violation. Holding verdicts re-validate trivially.
bool revalidate_witness(const Profile& p, const Triple& t, const ConditionVerdict& verdict);

} // namespace majority
