#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "propcount/multipoly.hpp"
#include "propcount/report.hpp"

namespace propcount {

// Preference map for n cars over n+c spaces. Valid (all cars park, with
// parking forbidden in the last space) iff the block counts satisfy
// |B_1| + ... + |B_i| >= i - c + 1 for every i.
struct ParkingFn {
    int n = 0;
    int c = 1;
    std::vector<int> prefs;  // prefs[z-1] in 1..n+c for car z

    bool is_valid() const;  // block criterion
    // "n=3 c=1 prefs=1,1,2"
    std::string literal() const;
};

ParkingFn parse_parking_literal(const std::string& text);

// FAILURE is a value; assignment holds space 0 for any car left unparked.
struct ParkOutcome {
    bool success = false;
    std::vector<int> assignment;  // assignment[z-1] = space of car z, 0 if unparked
    std::vector<int> lucky;       // cars parked exactly at their preference
    std::vector<int> empty;       // free spaces on success
};

// Simulates the process: each arriving car takes the first free space s
// with pref <= s <= n+c-1, or fails. Default arrival order is 1..n.
ParkOutcome park(const ParkingFn& f, const std::vector<int>& arrival_order = {});

inline constexpr long kParkingEnumBudget = 2'000'000;

// All valid c-parking functions on [n]; there are c(n+c)^{n-1} of them.
void for_each_parking(int n, int c, const std::function<void(const ParkingFn&)>& fn);

Int parking_count(int n, int c);

// sum over c-parking functions of u^{lucky} (increasing arrival order).
MultiPoly lucky_poly(int n, int c);

// Splits an ordinary parking function at every index i < n with
// |B_1|+...+|B_i| = i; the factors, relabeled to initial segments, are
// the prime parking functions whose concatenation reconstructs f.
std::vector<ParkingFn> prime_decompose(const ParkingFn& f);

// Splits a c-parking function after each interior empty space into c
// ordinary parking functions.
std::vector<ParkingFn> split_at_empty_spaces(const ParkingFn& f);

bool is_prime_parking(const ParkingFn& f);

// sum over prime parking functions on [n] of u^{lucky}.
MultiPoly prime_lucky_poly(int n);

// Over every preference map [n] -> [n+c]: the process succeeds for every
// arrival order or fails for every arrival order.
Report order_invariance_sweep(int n, int c);

// Over every preference map [n] -> [n+c]: simulation success agrees with
// the block criterion.
Report block_criterion_sweep(int n, int c);

// Over every parking function on [n]: the factor lucky counts add up to
// the lucky count of the whole function.
Report prime_compatibility_sweep(int n);

}  // namespace propcount
