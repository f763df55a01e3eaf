#ifndef LAZYSTREAMS_COMBINATORS_HPP
#define LAZYSTREAMS_COMBINATORS_HPP

#include <functional>
#include <utility>

#include "lazystreams/generator.hpp"

namespace lazystreams {

// Every combinator takes ownership of its input generators.

/// Fair interleaving: asks the generators in turn, swapping after each
/// answer; once one is exhausted the other continues alone.
Generator sum(Generator g1, Generator g2);

/// Cartesian product enumerated by an engine that alternates between the
/// inputs. Each new element of one side is paired with every element seen
/// so far on the other side, newest first; pairs are always oriented
/// g1-element on the left. When one side runs out, each remaining element
/// of the other side is paired with the exhausted side's full history.
///
///   prod(naturals(), naturals()) -> 0-0, 1-0, 1-1, 0-1, 2-1, 2-0, 2-2, ...
Generator prod(Generator g1, Generator g2);

/// Cartesian product by anti-diagonals: diagonal d emits (x_i, y_{d-i})
/// for ascending i over the indices that exist.
Generator conv(Generator g1, Generator g2);

/// Cartesian product driven by a single counter n: the pair at index
/// cantor_unpair(n) is emitted, skipping indices past a finite input.
/// Buffers grow as inputs are consumed.
Generator prod_cantor(Generator g1, Generator g2);

/// f(x) for each x; a failing f ends the stream.
Generator map1(UnaryFn f, Generator g);

/// f(x, y) pairwise; ends when either input (or f) fails.
Generator map2(BinaryFn f, Generator g1, Generator g2);

/// One-element stream holding the left fold of `g` from `init`, computed in
/// constant space on the first ask. Elements on which `f` fails are skipped.
/// An empty `g` yields `init`; a `g` that is already done yields nothing.
Generator reduce(BinaryFn f, Value init, Generator g);

/// Running fold: f(init, x1), f(f(init, x1), x2), ...
Generator scan(BinaryFn f, Value init, Generator g);

/// Distinct elements in first-occurrence order. Memory grows with the
/// number of distinct elements seen.
Generator setify(Generator g);

/// Splits `g` into (elements satisfying pred, the rest). The two halves
/// share the source and buffer whatever the other half has not read yet.
std::pair<Generator, Generator> partition(std::function<bool(const Value&)> pred, Generator g);

}  // namespace lazystreams

#endif  // LAZYSTREAMS_COMBINATORS_HPP
