#pragma once

// Generation and rendering of the two summary tables (always recomputed,
// never read from stored constants) and the output-format plumbing shared
// by the command-line tool and the test suites.

#include <optional>
#include <string>
#include <vector>

#include "hypaut/admissible.hpp"

namespace hypaut {

enum class OutputFormat { plain, markdown, csv, json };

OutputFormat parse_output_format(const std::string& name);  // throws domain_error

// Admissible primes in degree 4 for a range of dimensions.
struct AdmissibleTable {
    int degree = 4;
    struct Row {
        int n;
        std::vector<Integer> primes;
    };
    std::vector<Row> rows;
};

AdmissibleTable compute_table1(const std::vector<int>& dims = {3, 4, 5, 6, 7, 8, 9, 10});

// Maximal admissible prime over a (dimension, degree) grid; the excluded
// pair (2,4) carries no value and renders "-".
struct MaxPrimeTable {
    std::vector<int> dims;     // default 2..9
    std::vector<int> degrees;  // default 3..9
    // cells[i][j] for dims[i], degrees[j]; nullopt at the excluded (2,4)
    std::vector<std::vector<std::optional<Integer>>> cells;
};

MaxPrimeTable compute_table2(const std::vector<int>& dims = {2, 3, 4, 5, 6, 7, 8, 9},
                             const std::vector<int>& degrees = {3, 4, 5, 6, 7, 8, 9});

std::string render_table1(const AdmissibleTable& t, OutputFormat format);
std::string render_table2(const MaxPrimeTable& t, OutputFormat format);

// "2, 3, 5, 7, 61"
std::string join_primes(const std::vector<Integer>& primes);

}  // namespace hypaut
