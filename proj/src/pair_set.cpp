#include "tkplex/pair_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace tkplex {

namespace {

auto lower(std::vector<VertexFrames>& entries, Vertex v)
{
    return std::lower_bound(entries.begin(), entries.end(), v,
                            [](const VertexFrames& e, Vertex value) { return e.vertex < value; });
}

}  // namespace

PairSet::PairSet(std::vector<VertexFrames> entries)
{
    for (auto& e : entries) {
        merge(e.vertex, e.frames);
    }
}

const IntervalSet* PairSet::find(Vertex v) const noexcept
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const VertexFrames& e, Vertex value) { return e.vertex < value; });
    return it != entries_.end() && it->vertex == v ? &it->frames : nullptr;
}

std::vector<Vertex> PairSet::vertices() const
{
    std::vector<Vertex> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
        out.push_back(e.vertex);
    }
    return out;
}

void PairSet::merge(Vertex v, const IntervalSet& frames)
{
    if (frames.empty()) {
        return;
    }
    auto it = lower(entries_, v);
    if (it != entries_.end() && it->vertex == v) {
        it->frames = unite(it->frames, frames);
    } else {
        entries_.insert(it, VertexFrames{v, frames});
    }
}

void PairSet::erase(Vertex v)
{
    auto it = lower(entries_, v);
    if (it != entries_.end() && it->vertex == v) {
        entries_.erase(it);
    }
}

void PairSet::push_back_sorted(Vertex v, IntervalSet frames)
{
    if (frames.empty() || (!entries_.empty() && entries_.back().vertex >= v)) {
        throw std::logic_error("PairSet::push_back_sorted: order or emptiness violated");
    }
    entries_.push_back(VertexFrames{v, std::move(frames)});
}

PairSet restrict_time(const PairSet& set, const IntervalSet& frames)
{
    PairSet out;
    for (const auto& e : set) {
        IntervalSet cut = intersect(e.frames, frames);
        if (!cut.empty()) {
            out.push_back_sorted(e.vertex, std::move(cut));
        }
    }
    return out;
}

PairSet restrict_vertices(const PairSet& set, std::span<const Vertex> vertices)
{
    std::vector<Vertex> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    PairSet out;
    for (const auto& e : set) {
        if (std::binary_search(keep.begin(), keep.end(), e.vertex)) {
            out.push_back_sorted(e.vertex, e.frames);
        }
    }
    return out;
}

PairSet merge(const VertexFrames& pair, const PairSet& set)
{
    PairSet out = set;
    out.merge(pair.vertex, pair.frames);
    return out;
}

PairSet intersect(const PairSet& a, const PairSet& b)
{
    PairSet out;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->vertex < j->vertex) {
            ++i;
        } else if (j->vertex < i->vertex) {
            ++j;
        } else {
            IntervalSet cut = intersect(i->frames, j->frames);
            if (!cut.empty()) {
                out.push_back_sorted(i->vertex, std::move(cut));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace tkplex
