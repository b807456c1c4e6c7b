#include "tkplex/pool.hpp"

#include <algorithm>
#include <stdexcept>

namespace tkplex {

Pool::Pool(std::size_t vertex_count, TimeStep last_frame)
    : last_frame_(last_frame), runs_(vertex_count, std::vector<CountRun>{CountRun{1, last_frame, 0}})
{
    if (last_frame < 1) {
        throw std::invalid_argument("pool needs at least one frame");
    }
}

std::uint32_t Pool::count(Vertex w, TimeStep t) const
{
    const auto& runs = runs_.at(w);
    auto it = std::upper_bound(runs.begin(), runs.end(), t,
                               [](TimeStep value, const CountRun& r) { return value < r.start; });
    if (it == runs.begin() || std::prev(it)->end < t) {
        throw std::out_of_range("frame outside pool domain");
    }
    return std::prev(it)->count;
}

IntervalSet Pool::increment(Vertex w, const IntervalSet& frames, std::uint32_t critical,
                            std::vector<CountRun>* previous)
{
    auto& runs = runs_.at(w);
    if (frames.empty()) {
        if (previous) {
            *previous = runs;
        }
        return {};
    }
    std::vector<CountRun> out;
    out.reserve(runs.size() + 2 * frames.size());
    auto push = [&out](TimeStep start, TimeStep end, std::uint32_t count) {
        if (!out.empty() && out.back().count == count && out.back().end + 1 == start) {
            out.back().end = end;
        } else {
            out.push_back(CountRun{start, end, count});
        }
    };

    IntervalSetBuilder crit;
    auto f = frames.begin();
    for (const auto& run : runs) {
        TimeStep cursor = run.start;
        while (f != frames.end() && f->end < cursor) {
            ++f;
        }
        while (cursor <= run.end) {
            if (f == frames.end() || f->start > run.end) {
                push(cursor, run.end, run.count);
                break;
            }
            if (f->start > cursor) {
                push(cursor, f->start - 1, run.count);
                cursor = f->start;
            }
            const TimeStep hit_end = std::min(f->end, run.end);
            push(cursor, hit_end, run.count + 1);
            if (run.count + 1 == critical) {
                crit.append(cursor, hit_end);
            }
            cursor = hit_end + 1;
            if (f->end <= run.end) {
                ++f;
            }
        }
    }
    if (previous) {
        *previous = std::move(runs);
    }
    runs = std::move(out);
    return std::move(crit).finish();
}

}  // namespace tkplex
