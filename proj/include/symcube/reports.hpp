#pragma once

#include <string>
#include <vector>

#include "symcube/io.hpp"

namespace symcube {

/// Result of one command: a JSON payload plus pre-rendered human formats.
/// Rendering is deterministic; the timing field is appended only on
/// request so identical inputs give identical bytes.
struct Report {
    std::string command;
    Json body;               // includes "command" and "pass"
    std::string markdown;    // without the timing line
    std::string csv;         // empty when the command has no tabular form
    bool pass = true;
    long long elapsed_us = 0;

    std::string render(const std::string& format, bool with_timing) const;
};

Report run_decompose(int k, int n, Algebra algebra);
Report run_verify_hwv(int n, const std::vector<int>& rows);  // empty = all rows
Report run_multiplicity(int n, const std::string& weight_or_template);
Report run_verify_certificate(const std::string& path);
Report run_verify_certificate_text(const std::string& json_text);
Report run_lr(const std::string& lambda_text, const std::string& mu_text,
              int max_length, bool use_oracle);

/// Worker count for row-parallel verification: SYMCUBE_WORKERS when set,
/// otherwise the hardware concurrency (at least 1).
int worker_count();

Partition parse_partition_text(const std::string& text);

} // namespace symcube
