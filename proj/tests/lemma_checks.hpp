#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lemmas {

struct LemmaResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t counterexamples = 0;
    std::string first_witness;

    bool ok() const { return checked > 0 && counterexamples == 0; }
};

// Euclidean degree 2, q <= 9: I_x symmetric iff a_0 + a_1 = q - 1, SR iff a_0 + a_1 > q - 1 (x != 0).
LemmaResult euclid_decomposition();
// Hermitian degree 2, q <= 5 for all of the following.
LemmaResult singleton_shape();          // |I_x| = 1 iff (q^2+1) | x iff digits (a,b,a,b)
LemmaResult singleton_classes();        // singleton symmetric iff a_2+a_3 = q-1, SR iff > q-1 (x != 0)
LemmaResult no_symmetric_pairs();       // no symmetric coset of size 2
LemmaResult reciprocal_order();         // qx > qy iff a_2 > a_0 or (a_2 = a_0 and a_1 > a_3)
LemmaResult pair_classes();             // SR criterion for size-2 cosets
LemmaResult interlude_shape();          // interludes are the stated digit sets
LemmaResult low_range_fr();             // minimal representatives in (0, (q^4-1)/(q+1)) are FR
LemmaResult first_interlude();          // size-2 cosets below q^3+q are SR, and there are q^2-q of them
LemmaResult interlude_sr_small();       // a_2+a_3 < q-1: a_3 (q - a_3) SR representatives
LemmaResult interlude_sr_large();       // a_2+a_3 >= q-1: q^2 - q a_3 - a_2 - 1, all SR
// I_0 is symmetric in every setting; the two singleton lemmas above exclude x = 0.
LemmaResult zero_coset_symmetric();

std::vector<LemmaResult> all();

}  // namespace lemmas
