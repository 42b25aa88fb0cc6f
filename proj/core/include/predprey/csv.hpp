#ifndef PREDPREY_CSV_HPP
#define PREDPREY_CSV_HPP

#include <string>
#include <vector>

namespace predprey {

// Floats are serialised with 17 significant digits so that downstream
// analysis round-trips doubles exactly.
std::string format_double(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const;  // -1 when absent
    double number(std::size_t row, int col) const;
};

std::string to_csv(const CsvTable& t);
CsvTable parse_csv(const std::string& text);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace predprey

#endif
