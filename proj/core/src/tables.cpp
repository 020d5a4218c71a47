#include "hypaut/tables.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace hypaut {

OutputFormat parse_output_format(const std::string& name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "md" || name == "markdown") return OutputFormat::markdown;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::domain_error("unknown output format '" + name + "'");
}

std::string join_primes(const std::vector<Integer>& primes) {
    std::ostringstream os;
    for (size_t i = 0; i < primes.size(); ++i) {
        if (i) os << ", ";
        os << primes[i];
    }
    return os.str();
}

AdmissibleTable compute_table1(const std::vector<int>& dims) {
    AdmissibleTable t;
    for (int n : dims)
        t.rows.push_back({n, admissible_primes(ProblemInstance::make(n, t.degree))});
    return t;
}

MaxPrimeTable compute_table2(const std::vector<int>& dims, const std::vector<int>& degrees) {
    MaxPrimeTable t{dims, degrees, {}};
    for (int n : dims) {
        std::vector<std::optional<Integer>> row;
        for (int d : degrees) {
            if (n == 2 && d == 4)
                row.push_back(std::nullopt);
            else
                row.push_back(max_admissible_prime(ProblemInstance::make(n, d)));
        }
        t.cells.push_back(std::move(row));
    }
    return t;
}

std::string render_table1(const AdmissibleTable& t, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::markdown:
            os << "| n | admissible primes (d = " << t.degree << ") |\n";
            os << "|---:|:---|\n";
            for (const auto& row : t.rows)
                os << "| " << row.n << " | " << join_primes(row.primes) << " |\n";
            break;
        case OutputFormat::plain:
            for (const auto& row : t.rows)
                os << "n=" << row.n << ": " << join_primes(row.primes) << "\n";
            break;
        case OutputFormat::csv:
            os << "n,primes\n";
            for (const auto& row : t.rows) {
                os << row.n << ",";
                for (size_t i = 0; i < row.primes.size(); ++i)
                    os << (i ? " " : "") << row.primes[i];
                os << "\n";
            }
            break;
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["table"] = 1;
            j["degree"] = t.degree;
            j["rows"] = nlohmann::ordered_json::array();
            for (const auto& row : t.rows) {
                nlohmann::ordered_json r;
                r["n"] = row.n;
                r["primes"] = nlohmann::ordered_json::array();
                for (const Integer& p : row.primes) r["primes"].push_back(p.str());
                j["rows"].push_back(std::move(r));
            }
            os << j.dump(2) << "\n";
            break;
        }
    }
    return os.str();
}

std::string render_table2(const MaxPrimeTable& t, OutputFormat format) {
    std::ostringstream os;
    auto cell = [&](size_t i, size_t j) -> std::string {
        return t.cells[i][j] ? t.cells[i][j]->str() : "-";
    };
    switch (format) {
        case OutputFormat::markdown: {
            os << "| n\\d |";
            for (int d : t.degrees) os << " " << d << " |";
            os << "\n|---:|";
            for (size_t j = 0; j < t.degrees.size(); ++j) os << "---:|";
            os << "\n";
            for (size_t i = 0; i < t.dims.size(); ++i) {
                os << "| " << t.dims[i] << " |";
                for (size_t j = 0; j < t.degrees.size(); ++j) os << " " << cell(i, j) << " |";
                os << "\n";
            }
            break;
        }
        case OutputFormat::plain:
            for (size_t i = 0; i < t.dims.size(); ++i) {
                os << "n=" << t.dims[i] << ":";
                for (size_t j = 0; j < t.degrees.size(); ++j) os << " " << cell(i, j);
                os << "\n";
            }
            break;
        case OutputFormat::csv: {
            os << "n\\d";
            for (int d : t.degrees) os << "," << d;
            os << "\n";
            for (size_t i = 0; i < t.dims.size(); ++i) {
                os << t.dims[i];
                for (size_t j = 0; j < t.degrees.size(); ++j) os << "," << cell(i, j);
                os << "\n";
            }
            break;
        }
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["table"] = 2;
            j["degrees"] = t.degrees;
            j["rows"] = nlohmann::ordered_json::array();
            for (size_t i = 0; i < t.dims.size(); ++i) {
                nlohmann::ordered_json r;
                r["n"] = t.dims[i];
                r["max_admissible_prime"] = nlohmann::ordered_json::array();
                for (size_t jx = 0; jx < t.degrees.size(); ++jx) {
                    nlohmann::ordered_json c;
                    c["d"] = t.degrees[jx];
                    if (t.cells[i][jx])
                        c["p"] = t.cells[i][jx]->str();
                    else
                        c["p"] = nullptr;
                    r["max_admissible_prime"].push_back(std::move(c));
                }
                j["rows"].push_back(std::move(r));
            }
            os << j.dump(2) << "\n";
            break;
        }
    }
    return os.str();
}

}  // namespace hypaut
