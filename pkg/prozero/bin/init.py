"""
Script for initializing new prozero project directories: a copy of the
engine defaults (engine.yaml) and the example problem file.
"""

import os
import shutil
from argparse import ArgumentParser


def get_parser():
    """
    Returns an argument parser for this script
    """
    parser = ArgumentParser(description='Create a new project folder')

    # Define groups
    parser._action_groups.pop()
    required = parser.add_argument_group('required named arguments')
    optional = parser.add_argument_group('optional named arguments')

    required.add_argument('--name', type=str, required=True,
                          help='the name of the project folder')
    optional.add_argument('--root', type=str, default=os.path.abspath("./"),
                          help='a path to the root folder in '
                               'which the project will be initialized '
                               '(default=./)')
    optional.add_argument("--window", type=int, default=None,
                          help="Optional window written to the project's "
                               "engine.yaml")
    optional.add_argument("--overwrite", action="store_true",
                          help="Replace the parameter and problem files of "
                               "an existing project folder")
    return parser


def copy_yaml_and_set_window(in_path, out_path, window=None):
    """
    Creates a YAMLHParams object from in_path (the engine.yaml defaults),
    sets the 'window' value if specified and saves the file to out_path.

    Args:
        in_path:  (string) Path to a .yaml file storing the engine defaults
        out_path: (string) Path to save the parameters to
        window:   (int)    Optional window replacing the default one
    """
    from prozero.hyperparameters import YAMLHParams
    hparams = YAMLHParams(in_path, no_log=True)
    if window is not None:
        hparams.set_value("window", int(window), overwrite=True)
    hparams.save_current(out_path)


def init_project_folder(default_folder, out_folder, window=None):
    """
    Populates a project folder with engine.yaml and the problems/ folder.

    Args:
        default_folder: (string) Path to the prozero.bin.defaults folder
        out_folder:     (string) Path to the project directory to populate
        window:         (int)    Optional window for engine.yaml
    """
    copy_yaml_and_set_window(os.path.join(default_folder, "engine.yaml"),
                             os.path.join(out_folder, "engine.yaml"),
                             window)
    in_problems = os.path.join(default_folder, "problems")
    out_problems = os.path.join(out_folder, "problems")
    if not os.path.exists(out_problems):
        os.mkdir(out_problems)
    for file_name in sorted(os.listdir(in_problems)):
        shutil.copyfile(os.path.join(in_problems, file_name),
                        os.path.join(out_problems, file_name))


def run(args):
    """
    Run this script with the specified args. See argparser for details.
    """
    default_folder = os.path.split(os.path.abspath(__file__))[0] + "/defaults"
    if not os.path.exists(default_folder):
        raise OSError("Default path not found at %s" % default_folder)
    root_path = os.path.abspath(args.root)

    # Validate project path and create folder
    if not os.path.exists(root_path):
        raise OSError("root path '{}' does not exist.".format(args.root))
    out_folder = os.path.join(root_path, args.name)
    if os.path.exists(out_folder) and not args.overwrite:
        raise OSError("Folder at '{}' already exists (pass --overwrite to "
                      "replace its parameter files)".format(out_folder))
    os.makedirs(out_folder, exist_ok=True)
    init_project_folder(default_folder, out_folder, args.window)
    return out_folder


def entry_func(args=None):
    # Parse arguments
    parser = get_parser()
    run(parser.parse_args(args))


if __name__ == "__main__":
    entry_func()
