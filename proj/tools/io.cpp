#include "io.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "toric/version.hpp"

namespace cli {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw toric::parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

IndexMap parse_index_map(const std::string& text) {
    std::istringstream in(text);
    long long t;
    if (!(in >> t) || t < 1) throw toric::parse_error("index map must start with t >= 1");
    IndexMap m;
    m.t = static_cast<std::size_t>(t);
    long long k;
    while (in >> k) {
        if (k < 1 || k > t) throw toric::parse_error("index map entry " + std::to_string(k) + " outside [1, t]");
        m.phi.push_back(static_cast<int>(k - 1));
    }
    if (!in.eof()) throw toric::parse_error("index map entries must be integers");
    return m;
}

std::string format_index_map(const IndexMap& m) {
    std::string s = std::to_string(m.t);
    for (int k : m.phi) s += ' ' + std::to_string(k + 1);
    return s + '\n';
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw toric::parse_error("bad integer \"" + tok + "\" in list \"" + text + "\"");
        }
    }
    return out;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream ss;
    for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return ss.str();
}

int thread_count(int flag) {
    if (const char* env = std::getenv("TORIC_LIFT_THREADS")) {
        try {
            int k = std::stoi(env);
            if (k > 0) return k;
        } catch (const std::exception&) {
        }
    }
    if (flag > 0) return flag;
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Run::Run(std::string command, std::string out_dir) : command_(std::move(command)), dir_(std::move(out_dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw write_error("cannot create output directory " + dir_ + ": " + ec.message());
}

std::string Run::input(const std::string& path) {
    auto text = read_file(path);
    inputs_[path] = sha256_hex(text);
    return text;
}

toric::Matrix Run::matrix(const std::string& path) {
    std::istringstream in(input(path));
    try {
        return toric::read_matrix(in);
    } catch (const toric::parse_error& e) {
        throw toric::parse_error(path + ": " + e.what());
    }
}

IndexMap Run::index_map(const std::string& path) { return parse_index_map(input(path)); }

void Run::output(const std::string& name, const std::string& content) {
    auto path = std::filesystem::path(dir_) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << content) || !f.flush()) throw write_error("cannot write " + path.string());
    outputs_[name] = sha256_hex(content);
}

void Run::finish(int exit_code) {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream ts;
    ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
    nlohmann::json m;
    m["tool"] = "toric";
    m["version"] = toric::version;
    m["command"] = command_;
    m["parameters"] = params_;
    m["inputs"] = inputs_;
    m["outputs"] = outputs_;
    m["notes"] = notes_;
    m["exit_code"] = exit_code;
    m["timestamp"] = ts.str();
    output("manifest.json", m.dump(2) + "\n");
}

std::string moves_text(const std::vector<toric::Move>& moves, std::size_t n) {
    std::ostringstream ss;
    toric::write_moves(ss, moves, n);
    return ss.str();
}

std::string matrix_text(const toric::Matrix& m) {
    std::ostringstream ss;
    toric::write_matrix(ss, m);
    return ss.str();
}

} // namespace cli
