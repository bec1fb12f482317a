fn main() {
    // Restore the default SIGPIPE disposition so that piping output into a
    // pager or `head` terminates the process quietly instead of panicking
    // when stdout closes.
    #[cfg(unix)]
    // SAFETY: installing SIG_DFL for SIGPIPE before any other work is the
    // conventional single-threaded use of `signal` and cannot race.
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(latfree::cli::run());
}
