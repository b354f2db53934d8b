#pragma once

namespace drgq {

// Execution policy for the data-parallel kernels (charpoly, inertia, BFS,
// verification fan-out). The serial path is the reference implementation;
// both paths produce bit-identical results since all arithmetic is exact.
enum class Exec {
    serial,
    parallel,
};

} // namespace drgq
