#pragma once

#include "sixteen/cohomology/h1.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sixteen::cohomology {

struct Witness {
    FinAbGroup target;
    std::vector<weyl::SignedPerm> generators;
    std::size_t order = 0;
};

struct SearchBudget {
    std::size_t candidates = 100000;
    std::size_t cap = 64;       // largest subgroup considered
    int max_generators = 3;
};

struct SearchStats {
    std::size_t candidates = 0;
    std::size_t h1_evaluations = 0;
    std::size_t duplicates = 0;
};

/// The groups of exponent dividing 4 that may occur for degree d (1..9).
std::vector<FinAbGroup> brauer_targets(int degree);

/// Seeded random search for subgroups of W_D8 whose H^1 on Lambda_E8 is one
/// of `targets`. For each target keeps the smallest witness seen. Stops when
/// every target has a witness of order <= `good_order`, or when the budget
/// runs out.
std::vector<std::optional<Witness>> brauer_search(const std::vector<FinAbGroup>& targets, const SearchBudget& budget,
                                                  std::uint64_t seed, std::size_t good_order = 8,
                                                  SearchStats* stats = nullptr);

/// Single-target form. Throws NotFound after the budget.
Witness brauer_target_search(const FinAbGroup& target, const SearchBudget& budget, std::uint64_t seed);

struct Blowdown {
    std::vector<weyl::Root> classes; // root parts r_j of e_j = r_j - kappa
    IntMatrix complement;            // basis columns in simple-root coordinates
    FinAbGroup h1;
};

/// Sublattice of Lambda_E8 orthogonal to the given vectors, as columns in
/// simple-root coordinates.
IntMatrix orthogonal_complement(const std::vector<weyl::Root>& roots);

/// G-fixed pairwise-orthogonal exceptional classes e_1..e_{d-1} and H^1 of G
/// on the orthogonal complement of their root parts. With a target, returns
/// the first configuration whose H^1 matches it. Throws NotFound.
Blowdown blowdown_search(const std::vector<weyl::SignedPerm>& group, int degree,
                         const std::optional<FinAbGroup>& target = std::nullopt);

struct BlowdownWitness {
    std::vector<weyl::SignedPerm> generators;
    std::size_t order = 0;
    Blowdown blowdown;
};

/// Seeded search over small subgroups for a blow-down to degree d whose
/// complement has the given H^1. Throws NotFound.
BlowdownWitness blowdown_target_search(const FinAbGroup& target, int degree, const SearchBudget& budget,
                                       std::uint64_t seed);

std::string witnesses_to_json(const std::vector<Witness>& ws);
std::vector<Witness> witnesses_from_json(const std::string& text);

} // namespace sixteen::cohomology
