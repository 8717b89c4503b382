#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "shiftlr/tableau.hpp"

namespace shiftlr {

// Two partial fillings of one Young skew shape; together they cover it exactly once.
struct PerforatedPair {
    SkewShape shape;
    std::map<Cell, Entry> s_cells;
    std::map<Cell, Entry> t_cells;
    friend bool operator==(const PerforatedPair&, const PerforatedPair&) = default;
};

// Columns strictly increasing; every entry weakly northwest of x is <= x.
bool is_perforated(const std::map<Cell, Entry>& cells);
bool is_perforated_pair(const PerforatedPair& p);

struct SwitchStep {
    Cell s_cell;
    Cell t_cell;
    friend bool operator==(const SwitchStep&, const SwitchStep&) = default;
};

bool is_legal_step(const PerforatedPair& p, Cell s_cell, Cell t_cell);
// Throws PreconditionError when the swap is not legal.
PerforatedPair switch_step(const PerforatedPair& p, Cell s_cell, Cell t_cell);
// Legal steps in the default order: s cells row-major, horizontal before vertical.
std::vector<SwitchStep> legal_steps(const PerforatedPair& p);

using StepChooser = std::function<SwitchStep(const std::vector<SwitchStep>&)>;
// Applies legal steps until none remain; the default takes the first one.
PerforatedPair switch_all(PerforatedPair p, const StepChooser& choose = {});

struct Switched {
    Tableau t_inner;  // ^S T
    Tableau s_outer;  // S_T
};

// Switches S with an extension T of S.
Switched switch_tableaux(const Tableau& s, const Tableau& t, const StepChooser& choose = {});

// S in S(nu/lambda, U0) goes to (A0)_S in S(nu/mu, A0).
Tableau bijection_B(const Tableau& s, const Tableau& a0);

struct TableauPair {
    Tableau a;
    Tableau u;
    friend bool operator==(const TableauPair&, const TableauPair&) = default;
    friend auto operator<=>(const TableauPair&, const TableauPair&) = default;
};

// T(lambda, mu, V0) -> S(nu/lambda, U0) -> S(nu/mu, A0) -> T(mu, lambda, W0).
TableauPair composite_S(const TableauPair& pair, const Tableau& u0, const Tableau& a0, const Tableau& w0);

}  // namespace shiftlr
