#include <benchmark/benchmark.h>

// The distro's libbenchmark_main.a carries LTO bytecode from another GCC
// point release, so the entry point is built here.
BENCHMARK_MAIN();
