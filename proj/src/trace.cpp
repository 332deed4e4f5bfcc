#include "braidtrace/trace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "braidtrace/diagram.hpp"

namespace braidtrace {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int size) : parent(static_cast<size_t>(size)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// One of the two ends of a crossing id's lifetime.
enum class End { creation, termination };

struct EndRef {
    int id = -1;
    End end{};
};

// A vertex of the trace graph joins exactly two lifetime ends.
struct Vertex {
    EndRef a, b;
    bool monodromy = false;  // the end-of-loop positional identification
};

}  // namespace

TraceSet trace_circles(const LoopTranscript& transcript) {
    const int l = transcript.l;
    const int ids = transcript.id_count;
    TraceSet out;
    if (ids == 0) return out;

    // Markings: initial crossings from the input diagram, born crossings
    // from the diagram right after their birth.
    for (const GaussArrow& arrow : gauss_diagram(transcript.input).arrows)
        out.id_marking[arrow.id] = arrow.marking;
    for (const MoveEvent& ev : transcript.events) {
        if (ev.kind != MoveKind::r2birth) continue;
        const BraidWord word = values_of(ev.word_after);
        const int marking = homological_marking(word, ev.position);
        out.id_marking[ev.ids[0]] = marking;
        out.id_marking[ev.ids[1]] = marking;
    }
    if (static_cast<int>(out.id_marking.size()) != ids)
        throw std::logic_error("trace graph: some crossing id has no marking");

    // Vertices and the union-find partition.
    std::vector<Vertex> vertices;
    std::vector<int> creation_vertex(static_cast<size_t>(ids), -1);
    std::vector<int> termination_vertex(static_cast<size_t>(ids), -1);
    UnionFind uf(ids);

    auto add_vertex = [&](EndRef a, EndRef b, bool monodromy) {
        auto& slot_a = (a.end == End::creation) ? creation_vertex : termination_vertex;
        auto& slot_b = (b.end == End::creation) ? creation_vertex : termination_vertex;
        if (slot_a[static_cast<size_t>(a.id)] != -1 || slot_b[static_cast<size_t>(b.id)] != -1)
            throw std::logic_error("trace graph: lifetime end used twice");
        slot_a[static_cast<size_t>(a.id)] = static_cast<int>(vertices.size());
        slot_b[static_cast<size_t>(b.id)] = static_cast<int>(vertices.size());
        vertices.push_back({a, b, monodromy});
        uf.unite(a.id, b.id);
    };

    for (const MoveEvent& ev : transcript.events) {
        if (ev.kind == MoveKind::r2birth)
            add_vertex({ev.ids[0], End::creation}, {ev.ids[1], End::creation}, false);
        else if (ev.kind == MoveKind::r2death)
            add_vertex({ev.ids[0], End::termination}, {ev.ids[1], End::termination}, false);
    }
    for (const auto& [after, before] : monodromy(transcript))
        add_vertex({after, End::termination}, {before, End::creation}, true);

    for (int id = 0; id < ids; ++id)
        if (creation_vertex[static_cast<size_t>(id)] == -1 ||
            termination_vertex[static_cast<size_t>(id)] == -1)
            throw std::logic_error("trace graph: crossing id with an open lifetime end");

    auto seam_of = [&](int id) {
        auto it = transcript.seam_passes.find(id);
        return it == transcript.seam_passes.end() ? 0 : it->second;
    };

    // Rotation in which each crossing dies (survivors live through
    // rotation l) and the position of each crossing in every boundary
    // cross-section it is alive at.
    std::vector<int> end_rot(static_cast<size_t>(ids), l);
    for (const MoveEvent& ev : transcript.events)
        if (ev.kind == MoveKind::r2death) {
            end_rot[static_cast<size_t>(ev.ids[0])] = ev.rotation;
            end_rot[static_cast<size_t>(ev.ids[1])] = ev.rotation;
        }
    std::vector<std::map<int, int>> boundary_pos(static_cast<size_t>(l));
    for (int r = 0; r < l; ++r) {
        const auto& letters = transcript.boundary_words[static_cast<size_t>(r)].letters;
        for (size_t i = 0; i < letters.size(); ++i)
            boundary_pos[static_cast<size_t>(r)][letters[i].id] = static_cast<int>(i);
    }

    // Walk each component with a consistent orientation: traversing an
    // id forward runs creation -> termination; birth and death vertices
    // reverse the direction, the monodromy identification keeps it.
    // The phi-degree is the net seam passage count along the walk; its
    // overall sign depends on the walk orientation, which is not
    // intrinsic, so the magnitude is reported.
    std::vector<char> visited(static_cast<size_t>(ids), 0);
    std::vector<TraceCircle> circles;
    std::vector<int> circle_root;
    for (int start = 0; start < ids; ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        TraceCircle circle;
        long phi_total = 0;
        int id = start;
        int dir = +1;
        do {
            if (visited[static_cast<size_t>(id)])
                throw std::logic_error("trace graph: walk revisited a crossing id");
            visited[static_cast<size_t>(id)] = 1;
            circle.members.push_back(id);
            phi_total += dir * seam_of(id);
            const auto& exits = (dir > 0) ? termination_vertex : creation_vertex;
            const Vertex& v = vertices[static_cast<size_t>(exits[static_cast<size_t>(id)])];
            const EndRef next = (v.a.id == id && ((v.a.end == End::creation) == (dir < 0))) ? v.b : v.a;
            id = next.id;
            dir = (next.end == End::creation) ? +1 : -1;
        } while (!(id == start && dir == +1));
        circle.phi = static_cast<int>(std::abs(phi_total));

        // The l rotations are structurally identical copies of one
        // rotation, so each per-rotation segment of a crossing lifetime
        // projects to a slot of the one-rotation structure: a crossing
        // projects to its birth slot in the rotation it is born, and to
        // the boundary position it enters at in every later rotation it
        // lives through.  A circle covers exactly one circle of that
        // structure a whole number of times; the multiplicity is its
        // t-degree, the number of rotation periods it spans before it
        // closes up.
        std::map<std::tuple<int, int, int>, int> covering;
        for (int member : circle.members) {
            const BirthInfo& info = transcript.births.at(member);
            const int first_rot = info.rotation == 0 ? 1 : info.rotation;
            for (int r = first_rot; r <= end_rot[static_cast<size_t>(member)]; ++r) {
                if (r == first_rot && info.rotation >= 1) {
                    ++covering[{1, info.seq, info.slot}];
                } else {
                    const auto& positions = boundary_pos[static_cast<size_t>(r) - 1];
                    const auto it = positions.find(member);
                    if (it == positions.end())
                        throw std::logic_error(
                            "trace graph: crossing missing from a boundary cross-section");
                    ++covering[{2, it->second, 0}];
                }
            }
        }
        const int t = covering.begin()->second;
        for (const auto& [slot, count] : covering)
            if (count != t)
                throw std::logic_error(
                    "trace graph: uneven covering of the one-rotation structure");
        if (t < 1 || t > l || l % t != 0)
            throw std::logic_error("trace graph: circle spans an impossible period count");
        circle.t = t;
        std::sort(circle.members.begin(), circle.members.end());
        circle.marking = out.id_marking.at(circle.members.front());
        for (int member : circle.members)
            if (out.id_marking.at(member) != circle.marking)
                throw std::logic_error("trace graph: markings differ along one circle");
        circle_root.push_back(uf.find(start));
        circles.push_back(std::move(circle));
    }

    // The walk components must agree with the union-find partition.
    for (size_t i = 0; i < circles.size(); ++i)
        for (int member : circles[i].members)
            if (uf.find(member) != circle_root[i])
                throw std::logic_error("trace graph: walk disagrees with the event pairing");

    std::sort(circles.begin(), circles.end(), [](const TraceCircle& a, const TraceCircle& b) {
        return std::tuple(a.marking, a.t, a.phi, a.members.front()) <
               std::tuple(b.marking, b.t, b.phi, b.members.front());
    });
    for (size_t i = 0; i < circles.size(); ++i) {
        circles[i].name = "x" + std::to_string(i + 1);
        for (int member : circles[i].members) out.id_to_name[member] = circles[i].name;
    }
    out.circles = std::move(circles);
    return out;
}

TraceSet trace_circles(const BraidWord& word, int l) {
    return trace_circles(canonical_loop(word, l));
}

std::pair<int, int> homology_class(const TraceCircle& circle) {
    return {circle.phi, circle.t};
}

std::map<std::string, std::string> local_system_action(const LoopTranscript& transcript,
                                                       const TraceSet& trace) {
    const int l = transcript.l;
    std::map<std::string, std::string> action;
    if (transcript.id_count == 0) return action;

    // The rotations must be structurally identical move sequences for
    // the shift-by-one-rotation map to make sense.
    const auto& bounds = transcript.rotation_boundaries;
    const int per_rotation = bounds.empty() ? 0 : bounds.front();
    for (int r = 2; r <= l; ++r) {
        const int begin = bounds[static_cast<size_t>(r) - 2];
        if (bounds[static_cast<size_t>(r) - 1] - begin != per_rotation)
            throw std::logic_error("local system: rotations emit different move counts");
        for (int k = 0; k < per_rotation; ++k) {
            const MoveEvent& a = transcript.events[static_cast<size_t>(k)];
            const MoveEvent& b = transcript.events[static_cast<size_t>(begin + k)];
            if (a.kind != b.kind || a.position != b.position || a.offset != b.offset)
                throw std::logic_error("local system: rotations are not structurally identical");
        }
    }

    std::map<std::tuple<int, int, int>, int> birth_lookup;  // (rotation, seq, slot) -> id
    for (const auto& [id, info] : transcript.births)
        if (info.rotation >= 1) birth_lookup[{info.rotation, info.seq, info.slot}] = id;

    auto sigma = [&](int id) {
        const BirthInfo& info = transcript.births.at(id);
        if (info.rotation == 0) {
            // An initial crossing maps to whatever sits at its position
            // after one rotation.
            return transcript.boundary_words[1].letters[static_cast<size_t>(info.seq)].id;
        }
        const int next_rot = (info.rotation == l) ? 1 : info.rotation + 1;
        return birth_lookup.at({next_rot, info.seq, info.slot});
    };

    for (const TraceCircle& circle : trace.circles) {
        const std::string& image = trace.id_to_name.at(sigma(circle.members.front()));
        for (int member : circle.members)
            if (trace.id_to_name.at(sigma(member)) != image)
                throw std::logic_error("local system: shift does not respect the circles");
        action[circle.name] = image;
    }

    std::map<std::string, int> preimages;
    for (const auto& [from, to] : action) {
        (void)from;
        preimages[to] += 1;
    }
    if (preimages.size() != action.size())
        throw std::logic_error("local system: shift is not a bijection on circles");
    return action;
}

std::map<std::string, std::string> local_system_action(const BraidWord& word, int l) {
    const LoopTranscript transcript = canonical_loop(word, l);
    return local_system_action(transcript, trace_circles(transcript));
}

}  // namespace braidtrace
