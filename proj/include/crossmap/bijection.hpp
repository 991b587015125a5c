#pragma once

#include "crossmap/crossing.hpp"
#include "crossmap/partition.hpp"

namespace crossmap {

/// Maps a partition of a subset of [n] to a partition of [n+1].
///
/// Consecutive elements v < w of a block put v and w+1 together; a
/// singleton u puts u and u+1 together; every other element of [n+1] stays
/// a singleton. In arc terms the enhanced arc (x, y) becomes the classical
/// arc (x, y+1), so enhanced k-crossings and k-nestings of the input are
/// exactly the classical ones of the image.
PartialPartition forward(const PartialPartition& p);

/// Inverse of forward. The classical arc (x, x+1) becomes the singleton x and
/// (x, y) with y > x+1 becomes the arc (x, y-1). Throws NotFull when q has
/// absent elements, OutOfRange when q is over [0].
PartialPartition reverse(const PartialPartition& q);

/// Enhanced witness of p to the classical witness of forward(p): (a, b) -> (a, b+1).
CrossingWitness witness_forward(const CrossingWitness& w);

/// Classical witness of q to the enhanced witness of reverse(q): (a, b) -> (a, b-1).
CrossingWitness witness_reverse(const CrossingWitness& w);

}  // namespace crossmap
