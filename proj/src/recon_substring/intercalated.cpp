#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

#include "strrecon/errors.hpp"
#include "strrecon/substring.hpp"

namespace strrecon::substring {

namespace {

struct Cancelled {};

// Strict alternation of oracle access between two branches. A branch keeps
// the turn from its query until it asks for the next one or finishes, so the
// interleaving does not depend on thread scheduling. A branch that has
// finished no longer takes turns; a branch that succeeded stops the other.
class TurnTaking {
 public:
  template <class F>
  auto step(int who, F&& f) {
    std::unique_lock lock(mutex_);
    if (asked_[who]) {
      asked_[who] = false;
      turn_ = 1 - who;
      cv_.notify_all();
    }
    cv_.wait(lock, [&] { return cancelled_ || turn_ == who || done_[1 - who]; });
    if (cancelled_) throw Cancelled{};
    asked_[who] = true;
    return f();
  }

  void finish(int who, bool success) {
    std::lock_guard lock(mutex_);
    done_[who] = true;
    if (success) cancelled_ = true;
    turn_ = 1 - who;
    cv_.notify_all();
  }

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int turn_ = 0;
  bool asked_[2] = {false, false};
  bool done_[2] = {false, false};
  bool cancelled_ = false;
};

class BranchOracle final : public Oracle {
 public:
  BranchOracle(Oracle& inner, TurnTaking& turns, int who) : inner_(inner), turns_(turns), who_(who) {}

  const Alphabet& alphabet() const override { return inner_.alphabet(); }
  bool is_substr(std::string_view x) override {
    return turns_.step(who_, [&] {
      auto answer = inner_.is_substr(x);
      ++mine_.substr;
      return answer;
    });
  }
  bool is_subseq(std::string_view x) override {
    return turns_.step(who_, [&] {
      auto answer = inner_.is_subseq(x);
      ++mine_.subseq;
      return answer;
    });
  }
  bool jie(const ExtendedParikhVector& psi) override {
    return turns_.step(who_, [&] {
      auto answer = inner_.jie(psi);
      ++mine_.jie;
      return answer;
    });
  }
  std::optional<std::size_t> aji(const ParikhVector& psi) override {
    return turns_.step(who_, [&] {
      auto answer = inner_.aji(psi);
      ++mine_.aji;
      return answer;
    });
  }
  std::optional<std::size_t> rji(const ParikhVector& psi) override {
    return turns_.step(who_, [&] {
      auto answer = inner_.rji(psi);
      ++mine_.rji;
      return answer;
    });
  }
  QueryCounters counters() const override { return mine_; }

 private:
  Oracle& inner_;
  TurnTaking& turns_;
  int who_;
  QueryCounters mine_;
};

}  // namespace

ReconstructionReport reconstruct_corrupted_intercalated(Oracle& oracle, std::size_t d) {
  RunScope scope(oracle, "corrupted_intercalated");
  TurnTaking turns;
  BranchOracle plain(oracle, turns, 0);
  BranchOracle periodic(oracle, turns, 1);
  ReconstructionReport results[2];
  std::exception_ptr errors[2];

  auto run = [&](int who, auto&& body) {
    try {
      results[who] = body();
    } catch (const Cancelled&) {
      results[who].failure = "cancelled";
    } catch (...) {
      errors[who] = std::current_exception();
    }
    turns.finish(who, results[who].completed);
  };
  std::thread first([&] { run(0, [&] { return reconstruct_letter_by_letter(plain); }); });
  std::thread second([&] { run(1, [&] { return reconstruct_corrupted(periodic, d); }); });
  first.join();
  second.join();

  for (int who : {0, 1}) {
    if (!results[who].completed) continue;
    auto report = scope.success(results[who].output);
    report.metrics["winner"] = who;
    report.metrics["letter_by_letter_queries"] = static_cast<double>(plain.counters().total());
    report.metrics["corrupted_queries"] = static_cast<double>(periodic.counters().total());
    return report;
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return scope.failure("both branches failed: " + results[0].failure + "; " + results[1].failure);
}

}  // namespace strrecon::substring
