#pragma once

#include <string>
#include <vector>

#include "ksc/errors.hpp"

namespace ksc {

// One crossing of a planar knot diagram in arc notation: arcs are the
// strand runs between consecutive undercrossings, labeled 0..narcs-1.
// under_in enters the crossing, under_out leaves it, over passes across
// (the over arc is not broken, so both over slots carry the same label).
struct Crossing {
    int under_in = 0;
    int over = 0;
    int under_out = 0;
    int sign = 1; // +1 or -1, from the oriented local picture
};

struct DiagramCode {
    int narcs = 1;
    std::vector<Crossing> crossings;
};

// Structural checks: slot multiplicities (every arc appears exactly once as
// under_in and once as under_out when there are crossings), label ranges,
// and the single-component condition (the under_in -> under_out succession
// is one cycle through all arcs).  Throws precondition_error.
void validate(const DiagramCode& code);

// Text form, one crossing per line: X[+](a,b,c,d) with 1-based labels in
// counterclockwise order from the incoming under-strand; b and d both name
// the over arc.
std::string to_text(const DiagramCode& code);

// Parses the text form; rejects syntax errors, b != d, duplicate or missing
// arc slots, all with the offending line number.  Throws parse_error.
DiagramCode parse_text(const std::string& text);

// Bottom-up plat builder: a row of dangling wire ends is grown by cups,
// braided by crossings, and closed by caps.  Positions index the current
// wire row left to right.
class PlatBuilder {
public:
    enum class Over { left, right }; // which strand of the X is on top

    void cup(int pos);               // insert a new arc's two ends at pos
    void cap(int pos);               // join the ends at pos and pos+1
    void cross(int pos, Over over);  // cross wires pos and pos+1
    void twist(int pos, int full);   // |full| full twists; sign picks the handedness
    int width() const { return static_cast<int>(wires_.size()); }

    // Requires all wires capped; traces the closed curve, orients it, and
    // emits arc-labeled crossings.  Throws precondition_error if open ends
    // remain or the result has more than one component.
    DiagramCode finish() const;

private:
    struct Attach {
        int kind = 0;  // 0 unset, 1 cup/cap mate, 2 crossing port
        int peer = -1; // mate segment (kind 1) or crossing index (kind 2)
        int slot = 0;  // crossing corner: 0 nw, 1 ne, 2 sw, 3 se
    };
    struct X {
        int nw, ne, sw, se;
        Over over;
    };
    std::vector<int> wires_;
    std::vector<Attach> top_, bottom_;
    std::vector<X> cross_;
    int new_segment();
};

} // namespace ksc
