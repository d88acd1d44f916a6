#pragma once
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace bhlink {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Plain comma-separated values without quoting; throws InvalidInput on ragged rows.
CsvTable read_csv(std::istream& in);

struct BatchSummary {
    std::size_t rows = 0;
    std::size_t failed = 0;
};

// Reads rows headed w0..wn,d (extra columns pass through) and writes one
// result row per input row, in input order, whatever the job count.
BatchSummary run_batch(std::istream& in, std::ostream& out, unsigned jobs = 1);

// Runs f(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f);

}  // namespace bhlink
