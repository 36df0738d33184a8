#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "edupol/core_types.hpp"

namespace edupol {

/// One agent type: talents in the two sectors plus its population mass.
struct TalentProfile {
    double t_a = 0.0;
    double t_b = 0.0;
    double weight = 1.0;

    double best_talent() const { return t_a >= t_b ? t_a : t_b; }
    Sector best_sector() const { return t_a >= t_b ? Sector::A : Sector::B; }
    double talent(Sector s) const { return s == Sector::A ? t_a : t_b; }
};

/// Finite weighted list of agents standing in for the continuum economy.
/// Immutable after construction; per-capita quantities are weight averages.
class Population {
  public:
    explicit Population(std::vector<TalentProfile> agents);

    const std::vector<TalentProfile>& agents() const { return agents_; }
    std::size_t size() const { return agents_.size(); }
    double total_mass() const { return total_mass_; }
    const TalentProfile& operator[](std::size_t i) const { return agents_[i]; }

  private:
    std::vector<TalentProfile> agents_;
    double total_mass_ = 0.0;
};

/// True iff some agent is strictly better in sector a and some other agent
/// strictly better in sector b.
bool is_pluralistic(const Population& pop);

/// n agents evenly spaced on the simplex t_a + t_b = 1 with trapezoid
/// weights (endpoints half-weight), normalized to total mass 1.
Population simplex_population(int n);

/// Reads a population from CSV rows "t_a,t_b,weight". Lines starting with
/// '#' are comments; a single non-numeric header row is allowed.
Population load_population(const std::filesystem::path& path);

}  // namespace edupol
