"""
Behave Environment Setup
Handles before/after hooks for feature/scenario execution
"""
import logging
import os
import shutil
import tempfile
from pathlib import Path

from core.utils.config_reader import ConfigReader


def before_all(context):
    """Before all features"""
    context.config_reader = ConfigReader()
    context.logger = logging.getLogger(__name__)
    context.logger.info("Starting feature execution")

    os.makedirs("reports/allure/allure-results", exist_ok=True)


def before_feature(context, feature):
    """Before each feature"""
    context.logger.info(f"Starting feature: {feature.name}")


def before_scenario(context, scenario):
    """Each scenario gets its own scratch directory for inputs and outputs"""
    context.logger.info(f"Starting scenario: {scenario.name}")
    context.workdir = Path(tempfile.mkdtemp(prefix="postspec-"))
    context.repel = None


def after_scenario(context, scenario):
    """After each scenario"""
    if scenario.status == 'failed':
        context.logger.error(f"Scenario failed, inputs kept in {context.workdir}")
        return
    shutil.rmtree(context.workdir, ignore_errors=True)


def after_feature(context, feature):
    """After each feature"""
    context.logger.info(f"Finished feature: {feature.name}")


def after_all(context):
    """After all features"""
    context.logger.info("Feature execution completed")
