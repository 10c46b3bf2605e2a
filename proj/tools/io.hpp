#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "toric/intvec.hpp"

namespace cli {

enum Exit : int { ok = 0, verification_failed = 1, usage = 2, resource = 3 };

class write_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Index map file: t followed by one entry in [1, t] per column.
struct IndexMap {
    std::size_t t = 0;
    std::vector<int> phi; // zero-based
};

std::string read_file(const std::string& path);
IndexMap parse_index_map(const std::string& text);
std::string format_index_map(const IndexMap& m);
std::vector<int> parse_int_list(const std::string& text);

std::string sha256_hex(const std::string& bytes);

// TORIC_LIFT_THREADS wins over the flag; 0 means available parallelism.
int thread_count(int flag);

// One invocation: inputs are hashed when read, outputs are written as they
// are produced, and manifest.json is written by finish().
class Run {
public:
    Run(std::string command, std::string out_dir);

    std::string input(const std::string& path); // returns the contents
    toric::Matrix matrix(const std::string& path);
    IndexMap index_map(const std::string& path);
    void param(const std::string& key, nlohmann::json value) { params_[key] = std::move(value); }
    void output(const std::string& name, const std::string& content);
    void note(const std::string& line) { notes_.push_back(line); }
    void finish(int exit_code);

private:
    std::string command_, dir_;
    nlohmann::json params_ = nlohmann::json::object();
    std::map<std::string, std::string> inputs_, outputs_;
    std::vector<std::string> notes_;
};

std::string moves_text(const std::vector<toric::Move>& moves, std::size_t n);
std::string matrix_text(const toric::Matrix& m);

} // namespace cli
