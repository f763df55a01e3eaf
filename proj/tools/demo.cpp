#include <ostream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lazystreams/lazystreams.hpp"

namespace lazystreams::cli {

namespace {

struct Transcript {
  std::string label;
  std::string query;
  std::string expected;
  std::string actual;
};

std::string render_values(const std::vector<Value>& values) {
  Generator g = from_list(values);
  return show(values.size(), g);
}

std::vector<Transcript> transcripts() {
  std::vector<Transcript> out;
  {
    Generator zero = map2(fn::plus, positives(), negatives());
    out.push_back({"map", "map2(plus, pos, neg), show 10", "[0, 0, 0, 0, 0, 0, 0, 0, 0, 0]", show(10, zero)});
  }
  {
    Generator c = conv(positives(), from_list({sym("a"), sym("b"), sym("c")}));
    out.push_back({"convolution", "conv(pos, [a,b,c]), show 16",
                   "[1-a, 1-b, 2-a, 1-c, 2-b, 3-a, 2-c, 3-b, 4-a, 3-c, 4-b, 5-a, 4-c, 5-b, 6-a, 5-c]", show(16, c)});
  }
  out.push_back({"expression", "[a,b]*(1:4), all answers", "[a-1, b-1, b-2, a-2, b-3, a-3]",
                 render_values(eval_text("[a,b]*(1:4)", default_env(), 100))});
  {
    Generator s = sum(positives(), negatives());
    out.push_back({"sum", "sum(pos, neg), show 10", "[1, -1, 2, -2, 3, -3, 4, -4, 5, -5]", show(10, s)});
  }
  {
    Generator p = prod(naturals(), naturals());
    out.push_back({"product", "prod(nat, nat), show 12", "[0-0, 1-0, 1-1, 0-1, 2-1, 2-0, 2-2, 1-2, 0-2, 3-2, 3-1, 3-0]",
                   show(12, p)});
  }
  out.push_back({"setify", "{[a,b,a]}+(1:3)*c, first 3", "[a, 1-c, b]",
                 render_values(eval_text("{[a,b,a]}+(1:3)*c", default_env(), 3))});
  {
    Generator s = scan(fn::plus, Value(0), naturals());
    out.push_back({"scan", "scan(plus, 0, nat), show 11", "[0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55]", show(11, s)});
  }
  {
    LazyList ns = lazy_nats();
    LazyList ps = lazy_maplist(fn::succ, ns);
    out.push_back({"lazy nats", "lazy_nats, prefix 3", "[0, 1, 2]", render_values(lazy_take(3, ns))});
    out.push_back({"lazy maplist", "lazy_maplist(succ, lazy_nats), prefix 3", "[1, 2, 3]",
                   render_values(lazy_take(3, ps))});
  }
  return out;
}

}  // namespace

int run_demo(std::ostream& out) {
  int status = kOk;
  for (const auto& t : transcripts()) {
    const bool ok = t.actual == t.expected;
    out << (ok ? "[ok]   " : "[FAIL] ") << t.label << ": " << t.query << "\n       " << t.actual << '\n';
    if (!ok) {
      out << "       expected " << t.expected << '\n';
      status = kOracleMismatch;
    }
  }
  return status;
}

}  // namespace lazystreams::cli
