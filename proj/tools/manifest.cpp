#include "manifest.hpp"

#include "syncgame/errors.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace syncgame::cli {

std::string sha256_hex(const std::string &bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw InternalError("SHA-256 computation failed");
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < length; ++i)
        os << std::setw(2) << static_cast<int>(digest[i]);
    return os.str();
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunManifest::RunManifest(std::string command, std::vector<std::string> arguments)
    : command_(std::move(command)), arguments_(std::move(arguments))
{
}

void RunManifest::add_input(const std::string &path)
{
    inputs_.push_back({path, sha256_hex(read_file(path))});
}

void RunManifest::write_output(const std::string &path, const std::string &contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << contents;
    if (!out)
        throw Error("write to " + path + " failed");
    outputs_.push_back({path, sha256_hex(contents)});
}

std::string RunManifest::to_json() const
{
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["arguments"] = arguments_;
    j["tool_version"] = SYNCGAME_VERSION;
    j["seed"] = seed_;
    j["budget"]["millis"] = budget_millis_ ? nlohmann::ordered_json(*budget_millis_) : nlohmann::ordered_json(nullptr);
    j["budget"]["nodes"] = budget_nodes_ ? nlohmann::ordered_json(*budget_nodes_) : nlohmann::ordered_json(nullptr);
    j["tol"] = tol_ ? nlohmann::ordered_json(*tol_) : nlohmann::ordered_json(nullptr);
    auto files = [](const std::vector<File> &v) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto &f : v)
            arr.push_back({{"path", f.path}, {"sha256", f.sha256}});
        return arr;
    };
    j["inputs"] = files(inputs_);
    j["outputs"] = files(outputs_);
    return j.dump(2) + "\n";
}

void RunManifest::save(const std::string &path) const
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << to_json();
}

} // namespace syncgame::cli
