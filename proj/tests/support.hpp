#pragma once

#include "g1/model.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(G1_TEST_DATA) + "/" + name; }

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing fixture " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline g1::GenusOneModel fixture(const std::string& name) { return g1::parse_model(read_file(data_path(name))); }

inline g1::GenusOneModel random_model(std::mt19937& rng, int lo = -2, int hi = 2)
{
    std::uniform_int_distribution<int> d(lo, hi);
    std::array<g1::GenusOneModel::Form, 10> e;
    for (auto& f : e)
        for (auto& x : f) x = d(rng);
    return g1::GenusOneModel(e);
}

// product of random elementary matrices: determinant one, integer entries
inline g1::QMatrix random_unimodular(std::mt19937& rng, int steps = 8)
{
    g1::QMatrix m = g1::identity_matrix();
    std::uniform_int_distribution<int> idx(0, 4), val(-2, 2);
    for (int s = 0; s < steps; ++s) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        const int c = val(rng);
        for (int k = 0; k < 5; ++k) m[i][k] += c * m[j][k];
    }
    return m;
}

inline g1::QMatrix diagonal(std::initializer_list<long> d)
{
    g1::QMatrix m(5, std::vector<g1::Q>(5, g1::Q(0)));
    int i = 0;
    for (long x : d) {
        m[i][i] = x;
        ++i;
    }
    return m;
}

}  // namespace testing
