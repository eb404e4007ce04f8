#include "ksc/diagram.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace ksc {

void validate(const DiagramCode& code) {
    if (code.narcs < 1) throw precondition_error("diagram must have at least one arc");
    if (code.crossings.empty()) {
        if (code.narcs != 1)
            throw precondition_error("a crossingless diagram is the unknot: exactly one arc");
        return;
    }
    if (code.narcs != static_cast<int>(code.crossings.size()))
        throw precondition_error("a knot diagram has as many arcs as crossings");
    const int n = code.narcs;
    std::vector<int> in_count(static_cast<size_t>(n), 0), out_count(static_cast<size_t>(n), 0);
    std::vector<int> next(static_cast<size_t>(n), -1);
    for (const Crossing& x : code.crossings) {
        for (int lbl : {x.under_in, x.over, x.under_out})
            if (lbl < 0 || lbl >= n) throw precondition_error("arc label out of range");
        if (x.sign != 1 && x.sign != -1) throw precondition_error("crossing sign must be +-1");
        ++in_count[static_cast<size_t>(x.under_in)];
        ++out_count[static_cast<size_t>(x.under_out)];
        next[static_cast<size_t>(x.under_in)] = x.under_out;
    }
    for (int a = 0; a < n; ++a) {
        if (in_count[static_cast<size_t>(a)] != 1)
            throw precondition_error("arc " + std::to_string(a + 1) +
                                     " must appear exactly once as under-in");
        if (out_count[static_cast<size_t>(a)] != 1)
            throw precondition_error("arc " + std::to_string(a + 1) +
                                     " must appear exactly once as under-out");
    }
    // Single component: following each arc through its terminal crossing
    // visits every arc in one cycle.
    int seen = 0, a = 0;
    do {
        a = next[static_cast<size_t>(a)];
        ++seen;
    } while (a != 0 && seen <= n);
    if (a != 0 || seen != n)
        throw precondition_error("diagram is not a single closed component");
}

std::string to_text(const DiagramCode& code) {
    std::ostringstream os;
    for (const Crossing& x : code.crossings)
        os << "X[" << (x.sign > 0 ? '+' : '-') << "](" << x.under_in + 1 << ','
           << x.over + 1 << ',' << x.under_out + 1 << ',' << x.over + 1 << ")\n";
    return os.str();
}

namespace {

[[noreturn]] void fail_line(int line, const std::string& what) {
    throw parse_error("line " + std::to_string(line) + ": " + what);
}

} // namespace

DiagramCode parse_text(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int lineno = 0, nlines = 0;
    struct Entry {
        int a, b, c, d, sign, line;
    };
    std::vector<Entry> entries;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string s;
        for (char ch : raw)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) continue;
        nlines = lineno;
        int sign = 0;
        size_t body = 0;
        if (s.rfind("X[+](", 0) == 0) {
            sign = 1;
            body = 5;
        } else if (s.rfind("X[-](", 0) == 0) {
            sign = -1;
            body = 5;
        } else {
            fail_line(lineno, "expected X[+](a,b,c,d) or X[-](a,b,c,d)");
        }
        if (s.back() != ')') fail_line(lineno, "missing closing parenthesis");
        std::string inner = s.substr(body, s.size() - body - 1);
        std::array<int, 4> v{};
        size_t start = 0;
        for (int k = 0; k < 4; ++k) {
            size_t end = (k < 3) ? inner.find(',', start) : inner.size();
            if (k < 3 && end == std::string::npos) fail_line(lineno, "expected four arc labels");
            std::string tok = inner.substr(start, end - start);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                fail_line(lineno, "arc label is not a positive integer");
            try {
                v[static_cast<size_t>(k)] = std::stoi(tok);
            } catch (const std::exception&) {
                fail_line(lineno, "arc label out of range");
            }
            if (v[static_cast<size_t>(k)] < 1) fail_line(lineno, "arc labels are 1-based");
            start = end + 1;
        }
        if (start <= inner.size() && inner.find(',', start) != std::string::npos)
            fail_line(lineno, "expected exactly four arc labels");
        if (v[1] != v[3])
            fail_line(lineno, "over-strand slots disagree: the over arc is unbroken, so b = d");
        entries.push_back({v[0], v[1], v[2], v[3], sign, lineno});
    }
    if (entries.empty()) return DiagramCode{1, {}};

    const int n = static_cast<int>(entries.size());
    std::vector<int> in_line(static_cast<size_t>(n) + 1, 0), out_line(static_cast<size_t>(n) + 1, 0);
    DiagramCode code;
    code.narcs = n;
    for (const Entry& e : entries) {
        for (int lbl : {e.a, e.b, e.c})
            if (lbl > n)
                fail_line(e.line, "arc label " + std::to_string(lbl) + " exceeds arc count " +
                                      std::to_string(n));
        if (in_line[static_cast<size_t>(e.a)])
            fail_line(e.line, "duplicate under-in slot for arc " + std::to_string(e.a) +
                                  " (first on line " + std::to_string(in_line[static_cast<size_t>(e.a)]) + ")");
        if (out_line[static_cast<size_t>(e.c)])
            fail_line(e.line, "duplicate under-out slot for arc " + std::to_string(e.c) +
                                  " (first on line " + std::to_string(out_line[static_cast<size_t>(e.c)]) + ")");
        in_line[static_cast<size_t>(e.a)] = e.line;
        out_line[static_cast<size_t>(e.c)] = e.line;
        code.crossings.push_back({e.a - 1, e.b - 1, e.c - 1, e.sign});
    }
    for (int a = 1; a <= n; ++a) {
        if (!in_line[static_cast<size_t>(a)])
            fail_line(nlines, "arc " + std::to_string(a) + " never appears as under-in");
        if (!out_line[static_cast<size_t>(a)])
            fail_line(nlines, "arc " + std::to_string(a) + " never appears as under-out");
    }
    try {
        validate(code);
    } catch (const precondition_error& e) {
        fail_line(nlines, e.what());
    }
    return code;
}

int PlatBuilder::new_segment() {
    top_.emplace_back();
    bottom_.emplace_back();
    return static_cast<int>(top_.size()) - 1;
}

void PlatBuilder::cup(int pos) {
    if (pos < 0 || pos > width()) throw precondition_error("cup position out of range");
    int s1 = new_segment(), s2 = new_segment();
    top_[static_cast<size_t>(s1)] = {1, s2, 0};
    top_[static_cast<size_t>(s2)] = {1, s1, 0};
    wires_.insert(wires_.begin() + pos, {s1, s2});
}

void PlatBuilder::cap(int pos) {
    if (pos < 0 || pos + 1 >= width()) throw precondition_error("cap position out of range");
    int s1 = wires_[static_cast<size_t>(pos)], s2 = wires_[static_cast<size_t>(pos) + 1];
    bottom_[static_cast<size_t>(s1)] = {1, s2, 0};
    bottom_[static_cast<size_t>(s2)] = {1, s1, 0};
    wires_.erase(wires_.begin() + pos, wires_.begin() + pos + 2);
}

void PlatBuilder::cross(int pos, Over over) {
    if (pos < 0 || pos + 1 >= width()) throw precondition_error("crossing position out of range");
    int nw = wires_[static_cast<size_t>(pos)], ne = wires_[static_cast<size_t>(pos) + 1];
    int sw = new_segment(), se = new_segment();
    int idx = static_cast<int>(cross_.size());
    cross_.push_back({nw, ne, sw, se, over});
    bottom_[static_cast<size_t>(nw)] = {2, idx, 0};
    bottom_[static_cast<size_t>(ne)] = {2, idx, 1};
    top_[static_cast<size_t>(sw)] = {2, idx, 2};
    top_[static_cast<size_t>(se)] = {2, idx, 3};
    wires_[static_cast<size_t>(pos)] = sw;
    wires_[static_cast<size_t>(pos) + 1] = se;
}

void PlatBuilder::twist(int pos, int full) {
    const Over o = full > 0 ? Over::left : Over::right;
    for (int i = 0; i < 2 * std::abs(full); ++i) cross(pos, o);
}

DiagramCode PlatBuilder::finish() const {
    if (!wires_.empty()) throw precondition_error("plat closure incomplete: open wire ends remain");
    const int nseg = static_cast<int>(top_.size());
    if (cross_.empty()) {
        if (nseg == 0) throw precondition_error("empty plat");
        return DiagramCode{1, {}};
    }

    // Walk the curve from segment 0 heading down; record each pass through a
    // crossing as (crossing, corner, heading).  The nw corner connects through
    // the X to se, and ne to sw.
    struct Visit {
        int idx, slot;
        bool down;
    };
    std::vector<Visit> seq;
    std::vector<char> seen(static_cast<size_t>(nseg), 0);
    int s = 0;
    bool down = true;
    while (!seen[static_cast<size_t>(s)]) {
        seen[static_cast<size_t>(s)] = 1;
        const Attach& at = down ? bottom_[static_cast<size_t>(s)] : top_[static_cast<size_t>(s)];
        if (at.kind == 1) {
            s = at.peer;
            down = !down;
        } else {
            const X& x = cross_[static_cast<size_t>(at.peer)];
            seq.push_back({at.peer, at.slot, down});
            switch (at.slot) {
                case 0: s = x.se; break; // entered nw going down
                case 1: s = x.sw; break; // entered ne going down
                case 3: s = x.nw; break; // entered se going up
                default: s = x.ne; break; // entered sw going up
            }
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != nseg)
        throw precondition_error("plat closure has more than one component");

    const int ncross = static_cast<int>(cross_.size());
    // Corner -> which strand of the X it lies on: nw/se is one strand, ne/sw the other.
    auto left_strand = [](int slot) { return slot == 0 || slot == 3; };
    std::vector<char> is_over(seq.size());
    for (size_t i = 0; i < seq.size(); ++i)
        is_over[i] =
            left_strand(seq[i].slot) == (cross_[static_cast<size_t>(seq[i].idx)].over == Over::left);

    // Arc labels advance after each undercrossing pass; the traversal starts
    // mid-arc, and the trailing piece wraps around to arc 0.
    std::vector<int> arc_of(seq.size());
    int counter = 0;
    for (size_t i = 0; i < seq.size(); ++i) {
        arc_of[i] = counter % ncross;
        if (!is_over[i]) ++counter;
    }
    std::vector<int> under_visit(static_cast<size_t>(ncross), -1), over_visit(static_cast<size_t>(ncross), -1);
    for (size_t i = 0; i < seq.size(); ++i)
        (is_over[i] ? over_visit : under_visit)[static_cast<size_t>(seq[i].idx)] = static_cast<int>(i);

    // Heading of a pass as a planar vector; the left strand of an X runs
    // nw<->se, the right strand ne<->sw.
    auto heading = [&](const Visit& v) {
        int dx = left_strand(v.slot) ? 1 : -1;
        int dy = -1;
        if (!v.down) {
            dx = -dx;
            dy = 1;
        }
        return std::array<int, 2>{dx, dy};
    };

    DiagramCode code;
    code.narcs = ncross;
    for (int idx = 0; idx < ncross; ++idx) {
        int iu = under_visit[static_cast<size_t>(idx)], io = over_visit[static_cast<size_t>(idx)];
        if (iu < 0 || io < 0) throw precondition_error("crossing missed by traversal");
        int a = arc_of[static_cast<size_t>(iu)];
        int c = (a + 1) % ncross;
        int o = arc_of[static_cast<size_t>(io)];
        auto uv = heading(seq[static_cast<size_t>(iu)]);
        auto ov = heading(seq[static_cast<size_t>(io)]);
        int sign = (uv[0] * ov[1] - uv[1] * ov[0]) > 0 ? 1 : -1;
        code.crossings.push_back({a, o, c, sign});
    }
    return code;
}

} // namespace ksc
