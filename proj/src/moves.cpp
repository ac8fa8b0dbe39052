#include "chainrot/moves.hpp"

#include <cctype>
#include <stdexcept>

#include "chainrot/tree.hpp"

namespace chainrot {

namespace {

struct Legality {
    bool ok = true;
    MoveErrorKind kind = MoveErrorKind::BadVertex;
    std::string message;
};

Legality check(const Tree& t, const Move& m) {
    auto fail = [&](MoveErrorKind k, std::string msg) {
        return Legality{false, k, std::move(msg)};
    };
    for (int x : {m.top, m.bottom, m.pivot}) {
        if (x < 1 || x > t.n())
            return fail(MoveErrorKind::BadVertex,
                        "vertex " + std::to_string(x) + " out of range 1.." +
                            std::to_string(t.n()));
    }
    // The chain [top-bottom] must follow `side` pointers in t.
    bool reached = false;
    for (int x = m.top; x != 0; x = t.child(x, m.side)) {
        if (x == m.bottom) {
            reached = true;
            break;
        }
    }
    if (!reached)
        return fail(MoveErrorKind::BrokenChain,
                    "[" + std::to_string(m.top) + "-" + std::to_string(m.bottom) +
                        "] is not a " +
                        (m.side == Side::Left ? std::string("left") : "right") +
                        " chain");
    if (m.kind == MoveKind::Direct) {
        // top must hang off the pivot on the opposite side of the chain.
        if (t.child(m.pivot, opposite(m.side)) != m.top)
            return fail(MoveErrorKind::WrongPivot,
                        "vertex " + std::to_string(m.top) + " is not the " +
                            (m.side == Side::Left ? std::string("right") : "left") +
                            " child of pivot " + std::to_string(m.pivot));
    } else {
        // pivot must extend the chain below its bottom.
        if (t.child(m.bottom, m.side) != m.pivot)
            return fail(MoveErrorKind::WrongPivot,
                        "pivot " + std::to_string(m.pivot) + " is not the " +
                            (m.side == Side::Left ? std::string("left") : "right") +
                            " child of " + std::to_string(m.bottom));
    }
    return {};
}

}  // namespace

bool is_legal(const Tree& t, const Move& m) { return check(t, m).ok; }

Tree apply(const Tree& t, const Move& m) {
    Legality legal = check(t, m);
    if (!legal.ok) throw IllegalMove(legal.kind, legal.message);

    int n = t.n();
    std::vector<int> left = TreeInternal::left(t);
    std::vector<int> right = TreeInternal::right(t);
    int root = t.root();
    auto slot = [&](int v, Side s) -> int& {
        return s == Side::Left ? left[v] : right[v];
    };

    Side s = m.side, o = opposite(m.side);
    if (m.kind == MoveKind::Direct) {
        // top replaces pivot; pivot hangs below bottom on side s; bottom's
        // old s-subtree fills the slot top vacated under pivot.
        if (t.is_root(m.pivot))
            root = m.top;
        else
            slot(t.parent(m.pivot), t.side_of(m.pivot)) = m.top;
        int displaced = slot(m.bottom, s);
        slot(m.bottom, s) = m.pivot;
        slot(m.pivot, o) = displaced;
    } else {
        // pivot replaces top; top becomes pivot's o-child; pivot's old
        // o-subtree re-attaches below bottom where pivot used to hang.
        if (t.is_root(m.top))
            root = m.pivot;
        else
            slot(t.parent(m.top), t.side_of(m.top)) = m.pivot;
        int displaced = slot(m.pivot, o);
        slot(m.pivot, o) = m.top;
        slot(m.bottom, s) = displaced;
    }
    return TreeInternal::make(n, std::move(left), std::move(right), root);
}

Move invert(const Move& m) {
    Move out = m;
    out.kind = m.kind == MoveKind::Direct ? MoveKind::Inverse : MoveKind::Direct;
    return out;
}

std::vector<Move> enumerate_moves(const Tree& t, MoveSet set) {
    std::vector<Move> out;
    for (Side s : {Side::Left, Side::Right}) {
        Side o = opposite(s);
        for (int u = 1; u <= t.n(); ++u) {
            // Direct moves: u hangs on the o-side of its parent and carries
            // an s-chain; every suffix [u-v] of that chain is usable.
            if (!t.is_root(u) && t.side_of(u) == o) {
                int w = t.parent(u);
                for (int v = u; v != 0; v = t.child(v, s)) {
                    out.push_back(Move{MoveKind::Direct, s, u, v, w});
                    if (set == MoveSet::ROT) break;
                }
            }
            // Inverse moves: u is the bottom of nothing here; instead treat
            // u as the chain bottom v with an s-child pivot, extending the
            // chain upward while the walk stays on s-links.
            int w = t.child(u, s);
            if (w != 0) {
                int top = u;
                while (true) {
                    out.push_back(Move{MoveKind::Inverse, s, top, u, w});
                    if (set == MoveSet::ROT) break;
                    int p = t.parent(top);
                    if (top == t.root() || p == 0 || t.child(p, s) != top) break;
                    top = p;
                }
            }
        }
    }
    return out;
}

int pointer_delta(const Tree& a, const Tree& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("pointer_delta needs trees of equal size, got " +
                                    std::to_string(a.n()) + " and " +
                                    std::to_string(b.n()));
    int d = a.root() != b.root() ? 1 : 0;
    for (int v = 1; v <= a.n(); ++v) {
        if (a.left(v) != b.left(v)) ++d;
        if (a.right(v) != b.right(v)) ++d;
    }
    return d;
}

std::string format_move(const Move& m, bool with_side) {
    std::string chain = "[" + std::to_string(m.top);
    if (m.top != m.bottom) chain += "-" + std::to_string(m.bottom);
    chain += "]";
    std::string body =
        m.kind == MoveKind::Direct
            ? "rot(" + chain + "," + std::to_string(m.pivot) + ")"
            : "rot(" + std::to_string(m.pivot) + "," + chain + ")";
    if (with_side) body += side_char(m.side);
    return body;
}

namespace {

class MoveTextParser {
public:
    explicit MoveTextParser(const std::string& text) : s_(text) {}

    MoveText run() {
        MoveText mt;
        expect_word("rot");
        expect('(');
        skip_ws();
        if (peek() == '[') {
            mt.kind = MoveKind::Direct;
            parse_chain(mt);
            expect(',');
            mt.pivot = parse_int();
        } else {
            mt.kind = MoveKind::Inverse;
            mt.pivot = parse_int();
            expect(',');
            skip_ws();
            if (peek() != '[') throw ParseError("expected '[' in " + s_);
            parse_chain(mt);
        }
        expect(')');
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == 'L' || s_[pos_] == 'R')) {
            mt.side = s_[pos_] == 'L' ? Side::Left : Side::Right;
            ++pos_;
        }
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("trailing characters in move \"" + s_ + "\"");
        return mt;
    }

private:
    char peek() { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError("expected '" + std::string(1, c) + "' in move \"" +
                             s_ + "\"");
        ++pos_;
    }

    void expect_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) != 0)
            throw ParseError("moves start with \"rot\", got \"" + s_ + "\"");
        pos_ += w.size();
    }

    int parse_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected a vertex label in move \"" + s_ + "\"");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    void parse_chain(MoveText& mt) {
        expect('[');
        mt.top = parse_int();
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            mt.bottom = parse_int();
        } else {
            mt.bottom = mt.top;
        }
        expect(']');
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

MoveText parse_move_text(const std::string& text) {
    return MoveTextParser(text).run();
}

Move resolve_move(const Tree& t, const MoveText& mt) {
    for (int x : {mt.top, mt.bottom, mt.pivot}) {
        if (x < 1 || x > t.n())
            throw IllegalMove(MoveErrorKind::BadVertex,
                              "vertex " + std::to_string(x) + " out of range 1.." +
                                  std::to_string(t.n()));
    }
    Move m;
    m.kind = mt.kind;
    m.top = mt.top;
    m.bottom = mt.bottom;
    m.pivot = mt.pivot;
    if (mt.side) {
        m.side = *mt.side;
        return m;
    }
    if (mt.top != mt.bottom) {
        // Labels decrease along left chains and increase along right ones.
        m.side = mt.top > mt.bottom ? Side::Left : Side::Right;
        return m;
    }
    if (mt.kind == MoveKind::Direct) {
        // Singleton direct: the chain side is opposite to where top hangs
        // under the pivot.
        if (t.left(mt.pivot) == mt.top)
            m.side = Side::Right;
        else if (t.right(mt.pivot) == mt.top)
            m.side = Side::Left;
        else
            throw IllegalMove(MoveErrorKind::WrongPivot,
                              "vertex " + std::to_string(mt.top) +
                                  " is not a child of pivot " +
                                  std::to_string(mt.pivot));
    } else {
        // Singleton inverse: the side is where the pivot hangs under the
        // chain vertex.
        if (t.left(mt.bottom) == mt.pivot)
            m.side = Side::Left;
        else if (t.right(mt.bottom) == mt.pivot)
            m.side = Side::Right;
        else
            throw IllegalMove(MoveErrorKind::WrongPivot,
                              "pivot " + std::to_string(mt.pivot) +
                                  " is not a child of " + std::to_string(mt.bottom));
    }
    return m;
}

}  // namespace chainrot
