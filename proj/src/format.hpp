#pragma once

#include <string>
#include <vector>

#include "semigroup.hpp"

namespace glued {

// Line-oriented semigroup document:
//   # comment
//   free_rank: 2
//   torsion: 4            (omitted when there is no torsion)
//   gen: 1 ; -5 35        (torsion coordinates ; free coordinates)
//   gen: 3 5 7            (no semicolon when there is no torsion)
//   split: name 1 2 | 3 4 (optional named splits, 1-based indices)
// Key order on output is fixed, so serialize(parse(text)) == text for
// canonical files.
struct NamedSplit {
  std::string name;
  std::vector<std::size_t> left;  // 0-based, sorted
};

struct SemigroupFile {
  std::size_t free_rank = 0;
  std::vector<Int> torsion_orders;
  std::vector<GroupElement> generators;
  std::vector<NamedSplit> splits;

  AbelianGroup group() const { return AbelianGroup(torsion_orders, free_rank); }
  Semigroup semigroup() const { return Semigroup(group(), generators); }
};

SemigroupFile parse_semigroup_file(const std::string& text);
SemigroupFile read_semigroup_file(const std::string& path);
std::string serialize_semigroup_file(const SemigroupFile& f);
SemigroupFile file_from_semigroup(const Semigroup& s, std::vector<NamedSplit> splits = {});

// "1-4|5-8", "1,2|3" (1-based, both sides required) or the name of a split
// declared in the file. Malformed or mismatched specs raise BadSplit.
SplitSpec parse_split_arg(const std::string& text, std::size_t n_generators,
                          const std::vector<NamedSplit>& named);

// "(13,13)", "13,13" or with torsion "(1; -5, 35)" / "1;-5,35".
GroupElement parse_degree_arg(const std::string& text, const AbelianGroup& g);

// "2,0,2,0" or space separated; nonnegative entries not required here.
Vec parse_int_list(const std::string& text);

}  // namespace glued
