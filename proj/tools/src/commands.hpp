#pragma once

#include "report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace suq2::cli {

struct Options {
    std::string q;     // empty: command default
    std::string lmax;  // empty: command default
    double p = 1.5;
    double b = 2.0;
    double beta = 3.0;
    double q_exp = 2.0;
    uint64_t seed = 1;
    int trials = -1;
    int degree = -1;
    std::string output;
    std::string format = "csv";

    std::string kind;
    std::string dirac;
    std::string check = "leibniz";
    std::string multiplicity = "both";
    std::string symbol = "identity";
    bool bound = false;
    bool extract = false;
    bool classify = false;
    bool scan = false;
    bool eigenvalues = false;
};

// What a command produced: tables for the terminal, one primary table for the file,
// optional extra CSV files and an optional JSON payload.
struct Outcome {
    std::vector<Table> tables;
    size_t primary = 0;
    std::vector<std::pair<std::string, Table>> extra_csv;
    nlohmann::json data;
    bool ok = true;
};

Outcome run_orthogonality(const Options& o);
Outcome run_hopf(const Options& o);
Outcome run_fourier(const Options& o);
Outcome run_inequality(const Options& o);
Outcome run_multiplier(const Options& o);
Outcome run_spectrum(const Options& o);
Outcome run_commutator(const Options& o);
Outcome run_calculus(const Options& o);
Outcome run_dirac_geometric(const Options& o);
Outcome run_laplacian(const Options& o);

}  // namespace suq2::cli
