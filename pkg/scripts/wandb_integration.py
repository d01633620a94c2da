#!/usr/bin/env python
"""
Weights & Biases (W&B) Weave integration for the Turán workbench.
Traces exact searches and verification runs when WANDB_API_KEY is set.
"""

import logging
import os
from datetime import datetime
from typing import Any, Dict, Optional

import weave

from scripts import settings

logger = logging.getLogger(__name__)


class WeaveTracer:
    """W&B Weave integration for tracing workbench runs."""

    def __init__(self, project_name: str = settings.WANDB_PROJECT, entity: Optional[str] = settings.WANDB_ENTITY):
        """
        Initialize Weave client for tracing.

        Args:
            project_name: W&B project name
            entity: W&B entity/team name (optional)
        """
        self.project_name = project_name
        self.entity = entity
        self.initialized = False

        if not os.environ.get("WANDB_API_KEY"):
            logger.info("WANDB_API_KEY not found. Tracing is disabled.")
            return

        weave_project = f"{entity}/{project_name}" if entity else project_name
        try:
            weave.init(weave_project)
            self.initialized = True
            logger.info(f"W&B Weave initialized for project: {weave_project}")
        except Exception as e:
            logger.warning(f"W&B Weave initialization failed, tracing disabled: {e}")

    def is_enabled(self) -> bool:
        """Check if Weave tracing is enabled."""
        return self.initialized

    @weave.op()
    def trace_search_run(self, params: Dict[str, Any], result: Dict[str, Any]) -> Dict[str, Any]:
        """
        Attach run metadata to an exact-search result.

        Args:
            params: n, k, s and pattern of the run
            result: SearchResult as a dict

        Returns:
            The result with a ``weave_metadata`` entry
        """
        enhanced = dict(result)
        enhanced["weave_metadata"] = {
            "search_params": {**params, "timestamp": datetime.now().isoformat()},
            "results_summary": {
                "value": result.get("value"),
                "witness_count": len(result.get("witnesses", [])),
                "classes_visited": result.get("classes_visited", 0),
                "elapsed": result.get("elapsed", 0.0),
            },
        }
        return enhanced

    @weave.op()
    def trace_verification(self, kind: str, report: Dict[str, Any]) -> Dict[str, Any]:
        """Attach metadata to a conjecture or bound report."""
        enhanced = dict(report)
        enhanced["weave_metadata"] = {
            "kind": kind,
            "timestamp": datetime.now().isoformat(),
            "ok": report.get("chain_ok", report.get("value_ok")),
        }
        return enhanced


# Global tracer instance
_tracer: Optional[WeaveTracer] = None


def initialize_weave(project_name: str = settings.WANDB_PROJECT, entity: Optional[str] = settings.WANDB_ENTITY) -> WeaveTracer:
    global _tracer
    _tracer = WeaveTracer(project_name, entity)
    return _tracer


def get_tracer() -> Optional[WeaveTracer]:
    """Get the global tracer instance."""
    return _tracer


def ensure_tracer() -> WeaveTracer:
    """Ensure tracer is initialized and return it."""
    global _tracer
    if _tracer is None:
        _tracer = initialize_weave()
    return _tracer


def trace_mcp_operation(operation_name: str):
    """
    Decorator that wraps a tool in a named Weave op when tracing is on.

    Args:
        operation_name: Name of the operation for tracing
    """
    def decorator(func):
        tracer = get_tracer()
        if tracer and tracer.is_enabled():
            return weave.op(name=operation_name)(func)
        return func
    return decorator


def record_search(params: Dict[str, Any], result: Dict[str, Any]) -> Dict[str, Any]:
    """Trace a search result if tracing is on; otherwise return it unchanged."""
    tracer = get_tracer()
    if tracer and tracer.is_enabled():
        return tracer.trace_search_run(params, result)
    return result


def record_verification(kind: str, report: Dict[str, Any]) -> Dict[str, Any]:
    tracer = get_tracer()
    if tracer and tracer.is_enabled():
        return tracer.trace_verification(kind, report)
    return report
