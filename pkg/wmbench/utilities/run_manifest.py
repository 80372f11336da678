##
# \file run_manifest.py
# \brief      Manifest of an output directory: tool version, config hash,
#             timestamps, per-stage timing and all emitted files with their
#             SHA-256 content hash
#

import os
import datetime

import pysitk.python_helper as ph

import wmbench
import wmbench.base.data_writer as dw
import wmbench.base.exceptions as exceptions

MANIFEST_FILENAME = "manifest.json"


def _get_time_stamp():
    return datetime.datetime.now().strftime("%Y-%m-%d %H:%M:%S")


class RunManifest(object):

    ##
    # \param      self        The object
    # \param      dir_output  output directory of the run
    #
    def __init__(self, dir_output):
        self._dir_output = dir_output
        self._path_to_file = os.path.join(dir_output, MANIFEST_FILENAME)
        self._dic = {
            "tool": "wmbench",
            "version": wmbench.__version__,
            "config_hash": None,
            "created": _get_time_stamp(),
            "updated": None,
            "stages": {},
            "artifacts": {},
        }

    ##
    # Read the manifest of an output directory; a new manifest is created if
    # there is none yet
    #
    @classmethod
    def read(cls, dir_output):
        manifest = cls(dir_output)
        if ph.file_exists(manifest.get_path_to_file()):
            dic = ph.read_dictionary_from_json(manifest.get_path_to_file())
            if dic.get("tool") != "wmbench":
                raise exceptions.UnsupportedFileFormat(
                    manifest.get_path_to_file(), "not a wmbench manifest")
            manifest._dic.update(dic)
        return manifest

    def get_path_to_file(self):
        return self._path_to_file

    def get_config_hash(self):
        return self._dic["config_hash"]

    def get_stages(self):
        return self._dic["stages"]

    def get_artifacts(self):
        return self._dic["artifacts"]

    ##
    # Record a finished stage.
    #
    # \param      self         The object
    # \param      stage        name of stage, e.g. 'generate'
    # \param      config_hash  hash of RunConfig used
    # \param      timings      dictionary name -> seconds; the total stage
    #                          time is expected under 'total'
    # \param      artifacts    paths of files written by the stage
    #
    def add_stage(self, stage, config_hash, timings, artifacts):
        self._dic["config_hash"] = config_hash
        self._dic["stages"][stage] = {
            "config_hash": config_hash,
            "finished": _get_time_stamp(),
            "timings_seconds": dict(timings),
        }
        for path_to_file in artifacts:
            self.add_artifact(path_to_file, stage)

    def add_artifact(self, path_to_file, stage):
        if not ph.file_exists(path_to_file):
            raise exceptions.FileNotExistent(path_to_file)
        name = os.path.relpath(path_to_file, self._dir_output)
        self._dic["artifacts"][name] = {
            "stage": stage,
            "sha256": dw.get_file_hash(path_to_file),
        }

    ##
    # Artifacts whose content changed or which were removed since they were
    # recorded
    #
    def get_inconsistent_artifacts(self):
        inconsistent = []
        for name, entry in sorted(self._dic["artifacts"].items()):
            path_to_file = os.path.join(self._dir_output, name)
            if not ph.file_exists(path_to_file) or \
                    dw.get_file_hash(path_to_file) != entry["sha256"]:
                inconsistent.append(name)
        return inconsistent

    def write(self, verbose=False):
        self._dic["updated"] = _get_time_stamp()
        ph.create_directory(self._dir_output)
        ph.write_dictionary_to_json(
            self._dic, self._path_to_file, verbose=verbose)
