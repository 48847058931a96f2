#pragma once

#include <string>

#include <json.hpp>

#include "starprod/eval.hpp"
#include "starprod/group.hpp"

namespace starprod {

// JSON schemas:
//   scalar    "a/b" string (rational) or number (float)
//   matrix    {"type":"matrix","n":2,"entries":[["1","2"],["3","4"]]}
//   vector    ["1","2"]
//   rotation  {"c":"5/4","s":"3/4"}
//   motion    {"rot":{"c":...,"s":...},"u":["1","1"]}
//   factorization {"h":<matrix>,"n":<matrix>}
//   boolean   plain JSON boolean

template <ScalarBackend S>
nlohmann::json encode_scalar(const S& s) {
    if constexpr (S::is_exact)
        return s.str();
    else
        return s.value();
}

template <ScalarBackend S>
S decode_scalar(const nlohmann::json& j, const std::string& path) {
    if constexpr (S::is_exact) {
        if (!j.is_string()) throw DecodeError(path, "expected a rational string");
        try {
            return S::parse(j.get<std::string>());
        } catch (const Error& e) {
            throw DecodeError(path, e.what());
        }
    } else {
        if (!j.is_number()) throw DecodeError(path, "expected a number");
        return S(j.get<double>());
    }
}

template <ScalarBackend S>
nlohmann::json encode_matrix(const Matrix<S>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(encode_scalar(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"type", "matrix"}, {"n", m.dim()}, {"entries", std::move(rows)}};
}

template <ScalarBackend S>
Matrix<S> decode_matrix(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object() || j.value("type", "") != "matrix" || !j.contains("n") ||
        !j.contains("entries"))
        throw DecodeError(path, "expected a matrix object");
    std::size_t n = j["n"].get<std::size_t>();
    if (n < 1) throw DecodeError(path + "/n", "dimension must be >= 1");
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != n)
        throw DecodeError(path + "/entries", "expected " + std::to_string(n) + " rows");
    Matrix<S> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = entries[i];
        std::string rp = path + "/entries/" + std::to_string(i);
        if (!row.is_array() || row.size() != n)
            throw DecodeError(rp, "expected " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k)
            m.at(i, k) = decode_scalar<S>(row[k], rp + "/" + std::to_string(k));
    }
    return m;
}

template <ScalarBackend S>
nlohmann::json encode_vec(const Vec2<S>& v) {
    return nlohmann::json::array({encode_scalar(v.e1), encode_scalar(v.e2)});
}

template <ScalarBackend S>
Vec2<S> decode_vec(const nlohmann::json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) throw DecodeError(path, "expected a 2-element array");
    return {decode_scalar<S>(j[0], path + "/0"), decode_scalar<S>(j[1], path + "/1")};
}

template <ScalarBackend S>
nlohmann::json encode_rotation(const HypRotation<S>& r) {
    return {{"c", encode_scalar(r.c())}, {"s", encode_scalar(r.s())}};
}

template <ScalarBackend S>
HypRotation<S> decode_rotation(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("c") || !j.contains("s"))
        throw DecodeError(path, "expected a rotation object with c and s");
    try {
        return HypRotation<S>(decode_scalar<S>(j["c"], path + "/c"),
                              decode_scalar<S>(j["s"], path + "/s"));
    } catch (const InvalidArgument& e) {
        throw DecodeError(path, e.what());
    }
}

template <ScalarBackend S>
nlohmann::json encode_motion(const Motion<S>& t) {
    return {{"rot", encode_rotation(t.rot)}, {"u", encode_vec(t.trans)}};
}

template <ScalarBackend S>
Motion<S> decode_motion(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("rot") || !j.contains("u"))
        throw DecodeError(path, "expected a motion object with rot and u");
    return {decode_rotation<S>(j["rot"], path + "/rot"), decode_vec<S>(j["u"], path + "/u")};
}

template <ScalarBackend S>
nlohmann::json encode_factorization(const HNFactorization<S>& f) {
    return {{"h", encode_matrix(f.h)}, {"n", encode_matrix(f.nPart)}};
}

template <ScalarBackend S>
HNFactorization<S> decode_factorization(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("h") || !j.contains("n"))
        throw DecodeError(path, "expected a factorization object with h and n");
    return {decode_matrix<S>(j["h"], path + "/h"), decode_matrix<S>(j["n"], path + "/n")};
}

template <ScalarBackend S>
nlohmann::json encode_value(const Value<S>& v) {
    return std::visit(
        [](const auto& x) -> nlohmann::json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, S>)
                return encode_scalar(x);
            else if constexpr (std::is_same_v<T, Matrix<S>>)
                return encode_matrix(x);
            else if constexpr (std::is_same_v<T, Vec2<S>>)
                return encode_vec(x);
            else if constexpr (std::is_same_v<T, HypRotation<S>>)
                return encode_rotation(x);
            else if constexpr (std::is_same_v<T, Motion<S>>)
                return encode_motion(x);
            else
                return x;
        },
        v);
}

template <ScalarBackend S>
Value<S> decode_value(const nlohmann::json& j, const std::string& path = "") {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_string() || j.is_number()) return decode_scalar<S>(j, path);
    if (j.is_array()) return decode_vec<S>(j, path);
    if (j.is_object()) {
        if (j.value("type", "") == "matrix") return decode_matrix<S>(j, path);
        if (j.contains("rot") && j.contains("u")) return decode_motion<S>(j, path);
        if (j.contains("c") && j.contains("s")) return decode_rotation<S>(j, path);
    }
    throw DecodeError(path, "unrecognized value shape");
}

}  // namespace starprod
