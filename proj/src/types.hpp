#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace glued {

// All integer arithmetic in the library is arbitrary precision.
using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

Int dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scaled(const Vec& a, const Int& c);

// -1, 0, 1 comparison in lexicographic order (first differing coordinate).
int lex_compare(const Vec& a, const Vec& b);

// Canonical residue in [0, m) for m > 0.
Int mod_floor(const Int& a, const Int& m);

std::string vec_to_string(const Vec& v, const std::string& sep = ", ");

}  // namespace glued
