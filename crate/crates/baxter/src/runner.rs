//! Runs independent jobs on a scoped thread pool.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::report::Record;

/// A unit of work producing one or more records.
pub type Job = Box<dyn FnOnce() -> Vec<Record> + Send>;

/// Environment variable overriding the worker count.
pub const THREADS_VAR: &str = "BAXTER_THREADS";

pub fn thread_count() -> usize {
    std::env::var(THREADS_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// Runs every job and concatenates the records in job order.
pub fn run(jobs: Vec<Job>) -> Vec<Record> {
    let total = jobs.len();
    let workers = thread_count().min(total.max(1));
    let queue: Vec<Mutex<Option<Job>>> = jobs.into_iter().map(|j| Mutex::new(Some(j))).collect();
    let results: Vec<Mutex<Vec<Record>>> = (0..total).map(|_| Mutex::new(Vec::new())).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= total {
                    break;
                }
                let job = queue[i].lock().expect("job lock").take();
                if let Some(job) = job {
                    *results[i].lock().expect("result lock") = job();
                }
            });
        }
    });
    results.into_iter().flat_map(|m| m.into_inner().expect("result lock")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_stable() {
        let jobs: Vec<Job> = (0..20)
            .map(|i| Box::new(move || vec![Record::new(&format!("j{i:02}"), "")]) as Job)
            .collect();
        let names: Vec<String> = run(jobs).into_iter().map(|r| r.name).collect();
        let expect: Vec<String> = (0..20).map(|i| format!("j{i:02}")).collect();
        assert_eq!(names, expect);
    }
}
