#include "cyclemat/retraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyclemat {

Retract retract_once(const CycleMatrix &m)
{
  std::size_t n = m.order();
  std::map<std::vector<Label>, Label> class_of_row;
  std::vector<Label> class_map(n);
  std::vector<Label> representative;
  for (std::size_t x = 0; x < n; ++x) {
    auto r = m.matrix().row(x);
    auto [it, inserted] = class_of_row.try_emplace(std::vector<Label>(r.begin(), r.end()),
                                                   static_cast<Label>(representative.size()));
    if (inserted)
      representative.push_back(static_cast<Label>(x));
    class_map[x] = it->second;
  }

  std::size_t k = representative.size();
  Matrix q(k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d)
      q.at(c, d) = class_map[m.at(representative[c], representative[d])];

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (class_map[m.at(x, y)] != q.at(class_map[x], class_map[y]))
        throw std::logic_error("retraction is not well defined at (" + std::to_string(x + 1) +
                               "," + std::to_string(y + 1) + ")");

  return {CycleMatrix(std::move(q)), std::move(class_map)};
}

std::optional<std::size_t> RetractionChain::level() const
{
  if (outcome == Outcome::Terminates)
    return stages.size() - 1;
  return std::nullopt;
}

RetractionChain retraction_chain(const CycleMatrix &m)
{
  RetractionChain chain;
  chain.stages.push_back(m);
  while (chain.stages.back().order() > 1) {
    auto step = retract_once(chain.stages.back());
    if (step.quotient.order() == chain.stages.back().order()) {
      chain.outcome = RetractionChain::Outcome::Irretractable;
      return chain;
    }
    chain.class_maps.push_back(std::move(step.class_map));
    chain.stages.push_back(std::move(step.quotient));
  }
  chain.outcome = RetractionChain::Outcome::Terminates;
  return chain;
}

std::optional<std::size_t> multipermutation_level(const CycleMatrix &m)
{
  return retraction_chain(m).level();
}

} // namespace cyclemat
