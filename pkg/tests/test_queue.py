import time

from powermatch.utils.queue import run_jobs


def test_results_come_back_in_job_order():
    def job(n):
        def run():
            # later jobs finish first
            time.sleep(0.01 * (5 - n))
            return n * n

        return run

    assert run_jobs([job(n) for n in range(5)], workers=3) == [0, 1, 4, 9, 16]


def test_exceptions_are_returned_in_place():
    def broken():
        raise ValueError("bad job")

    results = run_jobs([lambda: 1, broken, lambda: 3], workers=2)
    assert results[0] == 1
    assert isinstance(results[1], ValueError)
    assert results[2] == 3


def test_no_jobs():
    assert run_jobs([]) == []
