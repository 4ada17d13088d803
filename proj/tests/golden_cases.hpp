#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace mzv::test {

struct GoldenCase {
    std::vector<std::string> args;
    std::string file;
};

inline const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases = {
        {{"product", "--type", "shuffle", "xy", "xy"}, "shuffle_xy_xy.txt"},
        {{"product", "--type", "star", "xy", "xy"}, "star_xy_xy.txt"},
        {{"product", "--type", "star", "y", "y"}, "star_y_y.txt"},
        {{"psi", "x^2y^3"}, "psi_x2y3.txt"},
        {{"derive", "C", "x^3yxy"}, "cyclic_x3yxy.txt"},
        {{"product", "--type", "qsym", "M(2)", "M(3)"}, "qsym_m2_m3.txt"},
        {{"product", "--type", "qsym", "E(2)", "E(3)"}, "qsym_e2_e3.txt"},
        {{"convert", "M(2,2)", "--to", "p"}, "power_sums_m22.txt"},
        {{"product", "--type", "shuffle", "xy", "xy", "--json"}, "shuffle_xy_xy.json"},
    };
    return cases;
}

inline std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mzv::test
