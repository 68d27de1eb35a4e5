#ifndef ROOTWELL_REPORT_HPP
#define ROOTWELL_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rootwell/batch.hpp"
#include "rootwell/closed_form.hpp"

namespace rootwell {

// One verification check: measured value against its documented threshold.
struct check_result {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

std::vector<check_result> verify_residual_suite(const physical_system& sys);
std::vector<check_result> verify_numerov_suite(const physical_system& sys);
std::vector<check_result> verify_heun_suite(const physical_system& sys);
std::vector<check_result> verify_wronskian_suite(const physical_system& sys);

void print_checks(std::ostream& os, const std::vector<check_result>& checks);
bool all_pass(const std::vector<check_result>& checks);

enum class file_format { csv, json };

// Tabular writers; CSV uses a header row, fixed column order and 17
// significant digits, the JSON files mirror the same fields.
void write_table(const std::string& path, file_format fmt,
                 const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows);

void write_grid(const std::string& path, file_format fmt, const grid_function& g,
                const std::string& x_name = "x", const std::string& v_name = "psi");

void write_spectrum_rows(const std::string& path, file_format fmt,
                         const std::vector<spectrum_row>& rows);

void write_check_report(const std::string& path, const std::vector<check_result>& checks);

} // namespace rootwell

#endif
