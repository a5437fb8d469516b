#ifndef MONOHIER_LEVEL_HPP
#define MONOHIER_LEVEL_HPP

#include <stdexcept>
#include <string>

namespace monohier {

/// Position in the monotone hierarchy: a finite depth m >= 1, or the free
/// case "infinity". Infinity is a distinct state, not a sentinel integer.
class Level {
public:
    static Level finite(int m) {
        if (m < 1) throw std::invalid_argument("hierarchy level must be >= 1");
        return Level(m);
    }
    static Level infinity() { return Level(kInfinite); }

    bool is_infinite() const { return m_ == kInfinite; }
    int value() const {
        if (is_infinite()) throw std::logic_error("infinite hierarchy level has no finite value");
        return m_;
    }

    /// True iff position j <= m (always true at infinity).
    bool admits_position(int j) const { return is_infinite() || j <= m_; }

    /// True iff the monotone-coloring constraint applies at block depth d,
    /// i.e. d >= m (never true at infinity).
    bool constrains_depth(int d) const { return !is_infinite() && d >= m_; }

    bool operator==(const Level&) const = default;

    std::string str() const { return is_infinite() ? "inf" : std::to_string(m_); }

    static Level parse(const std::string& text) {
        if (text == "inf" || text == "infinity" || text == "oo") return infinity();
        std::size_t pos = 0;
        int m = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("cannot parse level: '" + text + "'");
        return finite(m);
    }

private:
    explicit Level(int m) : m_(m) {}
    static constexpr int kInfinite = -1;
    int m_;
};

} // namespace monohier

#endif
