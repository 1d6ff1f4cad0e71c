#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace pcone {

// Thread count for the parallel-map sections (cost assembly, quadrature
// reductions). Results are independent of it: work is split into fixed-size
// chunks and chunk partials are combined in chunk order.
void set_thread_count(int n);
int thread_count();

// sum_{i<n} term(i), chunked.
double chunked_sum(std::size_t n, const std::function<double(std::size_t)>& term);

// Accumulates per-index contributions into a k-vector: body(i, local) adds
// index i's contribution to `local`; chunk locals are merged in chunk order.
std::vector<double> chunked_accumulate(
    std::size_t n, std::size_t k,
    const std::function<void(std::size_t, std::vector<double>&)>& body);

}  // namespace pcone
