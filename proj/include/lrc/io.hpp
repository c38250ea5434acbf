#ifndef LRC_IO_HPP
#define LRC_IO_HPP

#include <iosfwd>
#include <string>

#include "lrc/recovery.hpp"

namespace lrc {

// Code file format (UTF-8 text, '#' starts a comment):
//   field q=<q> p=<p> m=<m> primpoly=<c0,c1,...,cm>
//   code n=<n> k=<k>
//   G                       (or H)
//   <row of n canonical integer codes, space-separated>
//   ...
// A G-kind file lists k rows generating the code; an H-kind file lists n-k
// parity rows. parse followed by print is the identity on canonical files.
LinearCode parse_code(std::istream& in);
LinearCode load_code(const std::string& path);

void print_code(std::ostream& os, const LinearCode& C, char kind = 'G');

// Comma-separated word, '?' marking erasures: "0,0,?,1".
MaskedVec parse_masked_word(const std::string& text, const FieldPtr& field, int n);

// Report: one line per coordinate `i=<i> loc=<r_i> R=<sorted list> w=<ints>`,
// then `summary loc=<r> dual_distance=<d> optimal=<yes|no>`.
void print_structure(std::ostream& os, const RecoveryStructure& S, bool optimal);

}  // namespace lrc

#endif
