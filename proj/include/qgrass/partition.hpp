#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qgrass {

// A strict partition: a tuple of strictly decreasing positive integers.
// These index the Schubert basis of H*(LG(n)) and H*(OG(n)).  The ambient
// rank n is not stored; operations that depend on it take it explicitly,
// so the same value can be reused across ranks and as a map key.
class StrictPartition {
public:
    StrictPartition() = default;
    // Trailing zeros are tolerated and stripped; anything else that is not
    // strictly decreasing and positive throws std::invalid_argument.
    explicit StrictPartition(std::vector<int> parts);

    // Accepts "3,1", "3, 1", "" and "0" (both meaning the empty partition).
    static StrictPartition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }
    bool fits(int n) const { return max_part() <= n; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }

    std::string to_string() const;  // "3,1"; the empty partition prints as "0"

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    // Plain lexicographic order on the part tuple; used for map keys.
    // Display/basis order is basis_less below, which is graded.
    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<int> parts_;
};

// Basis order shared by every table and matrix: increasing weight, and
// within a weight the lexicographically larger part tuple first, so
// n=2 gives 0, (1), (2), (2,1) and weight 3 of n=3 gives (3) before (2,1).
bool basis_less(const StrictPartition& a, const StrictPartition& b);

// All 2^n strict partitions with parts in {1,...,n}, in basis order.
std::vector<StrictPartition> enumerate_strict(int n);

// The strict partition whose parts are {1,...,n} \ {parts of lambda}.
// Involutive; weight(lambda) + weight(complement) = n(n+1)/2.
StrictPartition complement(const StrictPartition& lambda, int n);

// Part tuple extended by zeros to even length 2*floor((l+1)/2).
std::vector<int> pad_even(const StrictPartition& lambda);

}  // namespace qgrass
