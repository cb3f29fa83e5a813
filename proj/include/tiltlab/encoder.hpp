#ifndef TILTLAB_ENCODER_HPP
#define TILTLAB_ENCODER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tiltlab/perm.hpp"

namespace tiltlab {

using BigInt = boost::multiprecision::cpp_int;

struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;  // 1-based indices, fixed points included
    BigInt order;                          // lcm of cycle lengths
    std::vector<int> lengths() const;
};

CycleDecomposition decompose(const Permutation& perm);

struct LandauPartition {
    int n = 0;
    std::vector<int> parts;  // ascending, fixed points omitted
    BigInt lcm_value;
};

// Maximal lcm over all integer partitions of n (Landau's function), computed
// by dynamic programming over prime powers. Unused budget becomes fixed points.
LandauPartition max_lcm_partition(int n);

// Exhaustive partition enumeration; test oracle for small n.
BigInt max_lcm_bruteforce(int n);

// A permutation of 1..n_total realizing the given cycle lengths (plus fixed points).
Permutation perm_from_partition(int n_total, const std::vector<int>& parts);

// Exact multinomial N! / (m1! m2! ...).
BigInt count_arrangements(const std::vector<long long>& multiplicities);

// A permutation applying frame k -> frame k+1 for all k (wrapping), if one
// exists. Frames are strings of color glyphs over the same positions.
// Exhaustive backtracking; positions capped at 12.
std::optional<Permutation> animation_feasible(const std::vector<std::string>& frames);

inline constexpr int kAnimationPositionCap = 12;

}  // namespace tiltlab

#endif
