#include "bottomless/subprocess.hpp"

#include <csignal>
#include <mutex>
#include <stdexcept>
#include <system_error>

#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

namespace bottomless {

namespace {

void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { std::signal(SIGPIPE, SIG_IGN); });
}

void close_fd(int& fd) {
  if (fd != -1) {
    ::close(fd);
    fd = -1;
  }
}

}  // namespace

LineProcess::LineProcess(const std::string& command) {
  ignore_sigpipe();
  int to_child[2], from_child[2];
  if (::pipe(to_child) != 0)
    throw std::system_error(errno, std::generic_category(), "pipe");
  if (::pipe(from_child) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw std::system_error(errno, std::generic_category(), "pipe");
  }
  pid_t pid = ::fork();
  if (pid < 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    ::close(from_child[0]);
    ::close(from_child[1]);
    throw std::system_error(errno, std::generic_category(), "fork");
  }
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    ::close(to_child[0]);
    ::close(to_child[1]);
    ::close(from_child[0]);
    ::close(from_child[1]);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  pid_ = pid;
  ::close(to_child[0]);
  ::close(from_child[1]);
  in_fd_ = to_child[1];
  out_fd_ = from_child[0];
}

LineProcess::~LineProcess() {
  close_fd(in_fd_);
  close_fd(out_fd_);
  if (pid_ != -1 && !waited_) {
    ::kill(static_cast<pid_t>(pid_), SIGKILL);
    int status = 0;
    ::waitpid(static_cast<pid_t>(pid_), &status, 0);
  }
}

void LineProcess::send_line(const std::string& line) {
  if (in_fd_ == -1) throw std::runtime_error("child stdin already closed");
  std::string data = line;
  data += '\n';
  std::size_t off = 0;
  while (off < data.size()) {
    ssize_t n = ::write(in_fd_, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw std::runtime_error("child process stopped reading");
    }
    off += static_cast<std::size_t>(n);
  }
}

std::optional<std::string> LineProcess::recv_line() {
  while (true) {
    std::size_t nl = buf_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buf_.substr(0, nl);
      buf_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    char chunk[4096];
    ssize_t n = ::read(out_fd_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      throw std::system_error(errno, std::generic_category(), "read");
    }
    if (n == 0) {
      if (buf_.empty()) return std::nullopt;
      std::string line = std::move(buf_);
      buf_.clear();
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    buf_.append(chunk, static_cast<std::size_t>(n));
  }
}

int LineProcess::close_and_wait() {
  close_fd(in_fd_);
  int status = 0;
  if (pid_ != -1 && !waited_) {
    ::waitpid(static_cast<pid_t>(pid_), &status, 0);
    waited_ = true;
  }
  close_fd(out_fd_);
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  if (WIFSIGNALED(status)) return -WTERMSIG(status);
  return 0;
}

}  // namespace bottomless
