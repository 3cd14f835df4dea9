#pragma once

// Word-size modular kernels. Each elimination routine has a serial
// reference and an OpenMP version that must produce identical output.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ratdyn/exactalg/scalar.hpp"

namespace ratdyn::modular {

using Word = std::uint64_t;

/// The 64 largest primes below 2^31, descending. Products of two residues
/// fit in a machine word.
const std::vector<Word>& primes();

inline Word mul_mod(Word a, Word b, Word p) { return (a * b) % p; }
inline Word add_mod(Word a, Word b, Word p) {
  Word s = a + b;
  return s >= p ? s - p : s;
}
inline Word sub_mod(Word a, Word b, Word p) { return a >= b ? a - b : a + p - b; }
Word inv_mod(Word a, Word p);

/// Image of q in Z/p, or nothing when p divides its denominator.
std::optional<Word> reduce(const Scalar& q, Word p);

/// Smallest-height rational congruent to `residue` modulo `modulus`, if one
/// exists with numerator and denominator below sqrt(modulus / 2).
std::optional<Scalar> rational_reconstruct(const Integer& residue, const Integer& modulus);

/// Dense row-major matrix over Z/p.
struct ModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Word prime = 0;
  std::vector<Word> data;

  ModMatrix(std::size_t r, std::size_t c, Word p) : rows(r), cols(c), prime(p), data(r * c, 0) {}
  Word& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Word at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref_serial(ModMatrix& m);
/// Same result as rref_serial; row updates of each pivot step run in
/// parallel on `jobs` threads (0 = OpenMP default).
std::vector<std::size_t> rref_parallel(ModMatrix& m, int jobs);

}  // namespace ratdyn::modular
