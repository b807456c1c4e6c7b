#include "tkplex/interval.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tkplex {

Interval::Interval(TimeStep start, TimeStep end) : start(start), end(end)
{
    if (start < 1 || start > end) {
        throw std::invalid_argument("invalid interval [" + std::to_string(start) + "," +
                                    std::to_string(end) + "]");
    }
}

void IntervalSetBuilder::append(TimeStep start, TimeStep end)
{
    if (!out_.empty() && start <= out_.back().end + 1) {
        out_.back().end = std::max(out_.back().end, end);
        return;
    }
    Interval iv;
    iv.start = start;
    iv.end = end;
    out_.push_back(iv);
}

IntervalSet IntervalSetBuilder::finish() &&
{
    return IntervalSet(IntervalSet::Canonical{}, std::move(out_));
}

IntervalSet::IntervalSet(Interval interval) : intervals_{interval} {}

IntervalSet::IntervalSet(std::initializer_list<Interval> intervals)
    : IntervalSet(std::vector<Interval>(intervals))
{
}

IntervalSet::IntervalSet(std::vector<Interval> intervals)
{
    std::sort(intervals.begin(), intervals.end());
    IntervalSetBuilder builder;
    builder.reserve(intervals.size());
    for (const auto& iv : intervals) {
        builder.append(iv.start, iv.end);
    }
    *this = std::move(builder).finish();
}

IntervalSet IntervalSet::parse(std::string_view text)
{
    auto fail = [&] {
        throw std::invalid_argument("malformed interval set: " + std::string(text));
    };
    auto skip_ws = [&](std::size_t& pos) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
            ++pos;
        }
    };
    auto read_int = [&](std::size_t& pos) {
        skip_ws(pos);
        TimeStep value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) {
            fail();
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        skip_ws(pos);
        return value;
    };
    auto expect = [&](std::size_t& pos, char c) {
        skip_ws(pos);
        if (pos >= text.size() || text[pos] != c) {
            fail();
        }
        ++pos;
    };

    std::size_t pos = 0;
    expect(pos, '{');
    std::vector<Interval> out;
    skip_ws(pos);
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        while (true) {
            expect(pos, '[');
            const TimeStep a = read_int(pos);
            expect(pos, ',');
            const TimeStep b = read_int(pos);
            expect(pos, ']');
            out.emplace_back(a, b);
            skip_ws(pos);
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect(pos, '}');
            break;
        }
    }
    skip_ws(pos);
    if (pos != text.size()) {
        fail();
    }
    return IntervalSet(std::move(out));
}

TimeStep IntervalSet::cardinality() const noexcept
{
    TimeStep total = 0;
    for (const auto& iv : intervals_) {
        total += iv.length();
    }
    return total;
}

bool IntervalSet::contains(TimeStep t) const noexcept
{
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), t,
                               [](TimeStep value, const Interval& iv) { return value < iv.start; });
    return it != intervals_.begin() && std::prev(it)->end >= t;
}

bool IntervalSet::has_member(const Interval& interval) const noexcept
{
    auto it = std::lower_bound(
        intervals_.begin(), intervals_.end(), interval.start,
        [](const Interval& iv, TimeStep value) { return iv.start < value; });
    return it != intervals_.end() && *it == interval;
}

std::string IntervalSet::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

bool is_covered(const Interval& interval, const IntervalSet& set) noexcept
{
    auto it = std::upper_bound(
        set.begin(), set.end(), interval.start,
        [](TimeStep value, const Interval& iv) { return value < iv.start; });
    return it != set.begin() && std::prev(it)->contains(interval);
}

bool is_covered(const IntervalSet& inner, const IntervalSet& outer) noexcept
{
    auto o = outer.begin();
    for (const auto& iv : inner) {
        while (o != outer.end() && o->end < iv.start) {
            ++o;
        }
        if (o == outer.end() || !o->contains(iv)) {
            return false;
        }
    }
    return true;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b)
{
    IntervalSetBuilder builder;
    builder.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->start <= j->start)) {
            builder.append(i->start, i->end);
            ++i;
        } else {
            builder.append(j->start, j->end);
            ++j;
        }
    }
    return std::move(builder).finish();
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b)
{
    IntervalSetBuilder builder;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        const TimeStep lo = std::max(i->start, j->start);
        const TimeStep hi = std::min(i->end, j->end);
        if (lo <= hi) {
            builder.append(lo, hi);
        }
        if (i->end < j->end) {
            ++i;
        } else {
            ++j;
        }
    }
    return std::move(builder).finish();
}

IntervalSet subtract(const IntervalSet& a, const IntervalSet& b)
{
    IntervalSetBuilder builder;
    auto j = b.begin();
    for (const auto& iv : a) {
        TimeStep cursor = iv.start;
        while (j != b.end() && j->end < cursor) {
            ++j;
        }
        auto k = j;
        while (k != b.end() && k->start <= iv.end) {
            if (k->start > cursor) {
                builder.append(cursor, k->start - 1);
            }
            cursor = std::max(cursor, k->end + 1);
            if (k->end > iv.end) {
                break;
            }
            ++k;
        }
        if (cursor <= iv.end) {
            builder.append(cursor, iv.end);
        }
        j = k;
    }
    return std::move(builder).finish();
}

bool overlaps(const IntervalSet& a, const IntervalSet& b) noexcept
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (std::max(i->start, j->start) <= std::min(i->end, j->end)) {
            return true;
        }
        if (i->end < j->end) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const Interval& interval)
{
    return os << '[' << interval.start << ',' << interval.end << ']';
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& set)
{
    os << '{';
    bool first = true;
    for (const auto& iv : set) {
        if (!first) {
            os << ',';
        }
        first = false;
        os << iv;
    }
    return os << '}';
}

}  // namespace tkplex
