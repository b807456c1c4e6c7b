#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tkplex {

/// A discrete time step or Δ-frame index. Valid values start at 1.
using TimeStep = std::int64_t;

/// Closed discrete interval [start, end] over positive integers.
struct Interval {
    TimeStep start = 1;
    TimeStep end = 1;

    Interval() = default;
    /// Throws std::invalid_argument unless 1 <= start <= end.
    Interval(TimeStep start, TimeStep end);

    [[nodiscard]] TimeStep length() const noexcept { return end - start + 1; }
    [[nodiscard]] bool contains(TimeStep t) const noexcept { return start <= t && t <= end; }
    [[nodiscard]] bool contains(const Interval& other) const noexcept
    {
        return start <= other.start && other.end <= end;
    }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Ordered collection of pairwise disjoint, non-adjacent intervals.
///
/// Every constructor and operation yields the canonical form: members are
/// sorted by start and satisfy end_i < start_{i+1} - 1, so the representation
/// of a set of integers is unique and equality is structural.
class IntervalSet {
public:
    IntervalSet() = default;
    IntervalSet(Interval interval);  // NOLINT(google-explicit-constructor)
    IntervalSet(std::initializer_list<Interval> intervals);
    /// Arbitrary (unsorted, overlapping) input; normalized on construction.
    explicit IntervalSet(std::vector<Interval> intervals);

    /// Parses the "{[a,b],[c,d]}" rendering. Throws std::invalid_argument.
    static IntervalSet parse(std::string_view text);

    [[nodiscard]] bool empty() const noexcept { return intervals_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return intervals_.size(); }
    [[nodiscard]] const std::vector<Interval>& intervals() const noexcept { return intervals_; }
    [[nodiscard]] auto begin() const noexcept { return intervals_.begin(); }
    [[nodiscard]] auto end() const noexcept { return intervals_.end(); }
    [[nodiscard]] const Interval& operator[](std::size_t i) const { return intervals_[i]; }

    /// Number of integers covered.
    [[nodiscard]] TimeStep cardinality() const noexcept;
    [[nodiscard]] bool contains(TimeStep t) const noexcept;
    /// True iff some member interval is exactly `interval`.
    [[nodiscard]] bool has_member(const Interval& interval) const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    struct Canonical {};
    IntervalSet(Canonical, std::vector<Interval> intervals) : intervals_(std::move(intervals)) {}

    friend class IntervalSetBuilder;

    std::vector<Interval> intervals_;
};

/// Appends intervals in ascending order, merging overlaps and adjacency.
class IntervalSetBuilder {
public:
    void reserve(std::size_t n) { out_.reserve(n); }
    /// Precondition: start >= start of every previously appended interval.
    void append(TimeStep start, TimeStep end);
    IntervalSet finish() &&;

private:
    std::vector<Interval> out_;
};

/// I ⊑ 𝓘: some member of `set` contains `interval`.
[[nodiscard]] bool is_covered(const Interval& interval, const IntervalSet& set) noexcept;
/// 𝓘 ⊑ 𝓙: every member of `inner` is covered by `outer`.
[[nodiscard]] bool is_covered(const IntervalSet& inner, const IntervalSet& outer) noexcept;

[[nodiscard]] IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
[[nodiscard]] IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
[[nodiscard]] IntervalSet subtract(const IntervalSet& a, const IntervalSet& b);
/// True iff the two sets share at least one integer.
[[nodiscard]] bool overlaps(const IntervalSet& a, const IntervalSet& b) noexcept;

std::ostream& operator<<(std::ostream& os, const Interval& interval);
std::ostream& operator<<(std::ostream& os, const IntervalSet& set);

}  // namespace tkplex
