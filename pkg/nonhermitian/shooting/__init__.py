from nonhermitian.shooting.oracle import ShootingProblem, mismatch, mismatch_scale, refine, refine_many

__all__ = ["ShootingProblem", "mismatch", "mismatch_scale", "refine", "refine_many"]
