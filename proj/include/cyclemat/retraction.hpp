#ifndef CYCLEMAT_RETRACTION_HPP
#define CYCLEMAT_RETRACTION_HPP

#include <optional>
#include <vector>

#include "cyclemat/cycle_matrix.hpp"

namespace cyclemat {

struct Retract
{
  CycleMatrix quotient;
  /// class_map[x] is the class of x; classes are numbered by their least
  /// member.
  std::vector<Label> class_map;
};

/// Quotient by the relation "equal rows". Throws std::logic_error if the
/// induced operation is not well defined (cannot happen for a valid input).
Retract retract_once(const CycleMatrix &m);

struct RetractionChain
{
  enum class Outcome
  {
    Terminates,    ///< last stage has one point
    Irretractable, ///< last stage has pairwise distinct rows
  };

  std::vector<CycleMatrix> stages;            ///< stages[0] is the input
  std::vector<std::vector<Label>> class_maps; ///< stages[t] -> stages[t + 1]
  Outcome outcome = Outcome::Terminates;

  /// Number of retraction steps when the chain reaches a single point.
  std::optional<std::size_t> level() const;
};

RetractionChain retraction_chain(const CycleMatrix &m);

/// Least r with |Ret^r| = 1; 0 for the one-point solution, nullopt when the
/// chain stalls at an irretractable stage.
std::optional<std::size_t> multipermutation_level(const CycleMatrix &m);

} // namespace cyclemat

#endif // CYCLEMAT_RETRACTION_HPP
