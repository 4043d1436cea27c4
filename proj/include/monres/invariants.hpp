// Good/bad classification, the residual-order invariant rho, the five
// boundary configurations and the lexicographic termination measure.
#pragma once

#include "monres/cleaning.hpp"

namespace monres {

enum class GoodBad { Good, Bad };

// A boundary divisor is good iff H equals mu at its generic point.
// Requires the divisor present and the element well-adapted there.
GoodBad classify_divisor(const Situation& s, Axis axis);

// The closed point is good iff H(P) = mu(P).
GoodBad classify_point(const Situation& s);

// With a_{p^e} = axis^r { g + axis*omega }: ord(g)/p^e when p^e does not
// divide r, else res_ord^{(p^e)}(g)/p^e.  Defined only for bad divisors.
Rat rho(const Situation& s, Axis axis);

// C1: one divisor, good.        C2: two divisors, both good.
// C3: one divisor, bad.         C4: two divisors, one bad one good.
// C5: two divisors, both bad.   bad_axis is meaningful for C3/C4 (and names
// the lone divisor for C1).
struct Configuration {
    int tag = 0;        // 1..5
    Axis bad_axis = Axis::X;
    Axis lone_axis = Axis::X;  // C1/C3: the single present divisor
    std::string name() const { return "C" + std::to_string(tag); }
};

Configuration configuration(const Situation& s);

struct InvMon {
    int config = 0;
    std::vector<Rat> tuple;
    std::string str() const;
};

InvMon inv_mon(const Situation& s);

// Lexicographic comparison padding missing trailing entries with -infinity.
// cmp < 0 when b < a; deciding_index = first differing position;
// index_in_both = whether that position exists in both tuples.
struct InvMonCmp {
    int cmp = 0;
    int deciding_index = -1;
    bool index_in_both = true;
};

InvMonCmp inv_mon_compare(const InvMon& b, const InvMon& a);
bool inv_mon_less(const InvMon& b, const InvMon& a);  // b < a strictly

}  // namespace monres
