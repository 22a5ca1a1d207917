#pragma once

#include <optional>
#include <string>

namespace bottomless {

// Child process running `/bin/sh -c command` with both standard streams
// piped.  Line-oriented: send_line appends '\n', recv_line strips it.
// SIGPIPE is ignored process-wide on first construction so a dead child
// surfaces as an exception from send_line instead of killing the caller.
class LineProcess {
 public:
  explicit LineProcess(const std::string& command);
  ~LineProcess();
  LineProcess(const LineProcess&) = delete;
  LineProcess& operator=(const LineProcess&) = delete;

  // Throws std::runtime_error if the child stopped reading.
  void send_line(const std::string& line);

  // Next line from the child's stdout; std::nullopt at end of stream.
  std::optional<std::string> recv_line();

  // Closes the child's stdin and waits.  Returns the exit status, or the
  // negated signal number if the child was killed.
  int close_and_wait();

 private:
  long pid_ = -1;
  int in_fd_ = -1;
  int out_fd_ = -1;
  bool waited_ = false;
  std::string buf_;
};

}  // namespace bottomless
