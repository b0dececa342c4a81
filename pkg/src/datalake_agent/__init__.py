"""Datalake Agent: NL2SQL over many databases by asking for schema metadata on demand."""

from __future__ import annotations

from .catalog import Catalog, load_catalog
from .llm import ModelConfig, ScriptedChatModel, TokenUsage, build_model
from .protocol import DBQueryFinalSQL, GetColumns, GetDBDescription, GetTables, ProtocolError, parse_model_turn
from .solvers import Limits, SolverOutcome, solve_agent, solve_direct

__all__ = [
    "Catalog",
    "DBQueryFinalSQL",
    "GetColumns",
    "GetDBDescription",
    "GetTables",
    "Limits",
    "ModelConfig",
    "ProtocolError",
    "ScriptedChatModel",
    "SolverOutcome",
    "TokenUsage",
    "build_model",
    "load_catalog",
    "parse_model_turn",
    "solve_agent",
    "solve_direct",
]

__version__ = "0.1.0"
